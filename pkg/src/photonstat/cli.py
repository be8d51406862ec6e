"""Command-line front end.

Subcommands
-----------
dist        photon-number distribution of a selected family
entropy     block-partition entropy report for a distribution
inequality  entropy-inequality margin report (which polynomial form ran)
violation   tau-sweep over the uncertainty-violation boundary
figures     two-column CSV data for the four standard information sweeps
oracle      run the independent cross-check suite (exit code = aggregate)

Output is byte-deterministic for identical configuration: floats are
rendered with 17 significant digits and rows follow the grid order.  Every
error path exits nonzero after printing a single machine-parsable line
``error: <reason-code>: <message>`` to stderr.
"""

from __future__ import annotations

import argparse
import json
import sys
from dataclasses import dataclass

import numpy as np

from .entropy import (
    ComplexEntropyReport,
    EntropyReport,
    PartitionScheme,
    block_entropies,
    complex_information,
    hermite_inequality_margin,
    laguerre_inequality_margin,
    poisson_parity_information,
)
from .errors import (
    ClassificationError,
    DivergentSeriesError,
    DomainError,
    InvalidSpecError,
    NormalizationError,
    ParityError,
    PhotonStatError,
    PoleError,
    RangeOverflowError,
    SingularDenominatorError,
)
from .gaussian_state import OneModeGaussianState, XYTState, from_tau, uncertainty_check
from .oracle import OracleGridConfig, run_suite, suite_passed, verdicts_to_json_lines
from .photon_dist import (
    DeformationKind,
    DeformationSpec,
    DEFAULT_TOL_IMAG,
    DEFAULT_TOL_NEG,
    PhotonDistribution,
    deformed_distribution,
    distribution_to_csv,
    distribution_to_json,
    mean_photon_xyt,
    pn_centered_xyt,
    pn_hermite,
    pn_laguerre,
    pn_violation,
    two_mode_p2k_distribution,
)

_REASON_CODES = (
    (ParityError, "parity-error"),
    (PoleError, "pole-error"),
    (SingularDenominatorError, "singular-denominator"),
    (ClassificationError, "classification-error"),
    (DivergentSeriesError, "divergent-series"),
    (NormalizationError, "normalization-error"),
    (InvalidSpecError, "invalid-spec"),
    (RangeOverflowError, "range-overflow"),
    (DomainError, "domain-error"),
    (PhotonStatError, "internal-error"),
)

_FAMILIES = (
    "gaussian",
    "xyt",
    "two-mode",
    "poisson",
    "f-coherent",
    "q-coherent",
    "squeezed-vacuum",
    "squeezed-correlated",
)


@dataclass
class RunConfig:
    """Validated per-invocation options shared by the subcommands."""

    command: str
    family: str | None = None
    state_path: str | None = None
    n_max: int | None = None
    partition_m: int = 2
    tol_imag: float = DEFAULT_TOL_IMAG
    tol_neg: float = DEFAULT_TOL_NEG
    output_format: str = "csv"
    branch: int = 0

    def __post_init__(self):
        if self.n_max is not None and self.n_max < 1:
            raise DomainError("--n-max must be at least 1")
        if self.partition_m < 2:
            raise DomainError("--partition must be at least 2")
        if self.tol_imag <= 0 or self.tol_neg <= 0:
            raise DomainError("tolerances must be positive")


def _fmt(v: float) -> str:
    return format(v, ".17g")


def _emit(text: str, out_path: str | None) -> None:
    if out_path:
        with open(out_path, "w", newline="") as fh:
            fh.write(text)
    else:
        sys.stdout.write(text)


def _load_state(path: str) -> OneModeGaussianState:
    try:
        with open(path) as fh:
            data = json.load(fh)
    except OSError as exc:
        raise DomainError(f"cannot read state file: {exc}") from exc
    except json.JSONDecodeError as exc:
        raise DomainError(f"state file is not valid JSON: {exc}") from exc
    if not isinstance(data, dict):
        raise DomainError("state descriptor must be a JSON object")
    return OneModeGaussianState.from_dict(data)


def _f_values(raw: str | None) -> tuple[float, ...]:
    if not raw:
        return ()
    try:
        return tuple(float(tok) for tok in raw.split(",") if tok.strip())
    except ValueError as exc:
        raise DomainError(f"--f-values must be comma-separated floats: {exc}") from exc


def _deformation_from_args(args) -> DeformationSpec:
    alpha = args.alpha if args.alpha is not None else 0.0
    common = dict(alpha_mag2=alpha * alpha)
    if args.family == "poisson":
        return DeformationSpec(DeformationKind.POISSON, **common)
    if args.family == "f-coherent":
        return DeformationSpec(
            DeformationKind.F_COHERENT,
            f_values=_f_values(args.f_values),
            f_convention=args.f_convention,
            **common,
        )
    if args.family == "q-coherent":
        return DeformationSpec(DeformationKind.Q_COHERENT, lam=args.lam, **common)
    if args.family == "squeezed-vacuum":
        return DeformationSpec(DeformationKind.SQUEEZED_VACUUM, r=args.r)
    if args.family == "squeezed-correlated":
        return DeformationSpec(
            DeformationKind.SQUEEZED_CORRELATED,
            r=args.r,
            theta=args.theta,
            mean_q=args.mean_q,
            mean_p=args.mean_p,
        )
    raise DomainError(f"family {args.family!r} is not a deformation family")


def _build_distribution(args, cfg: RunConfig) -> PhotonDistribution:
    tol = dict(tol_imag=cfg.tol_imag, tol_neg=cfg.tol_neg)
    fam = args.family
    if fam == "gaussian":
        if not args.state:
            raise DomainError("--family gaussian requires --state <json>")
        state = _load_state(args.state)
        route = pn_laguerre if args.route == "laguerre" else pn_hermite
        return route(state, cfg.n_max, **tol)
    if fam == "xyt":
        if args.y is None:
            raise DomainError("--family xyt requires --y")
        t = args.t if args.t is not None else 0.0
        if args.tau is not None:
            if args.x is not None:
                implied = (0.25 - args.tau + t * t) / args.y
                if abs(args.x - implied) > 1e-9 * max(1.0, abs(implied)):
                    raise DomainError(
                        f"--x {args.x} inconsistent with --tau {args.tau} "
                        f"(implied x = {implied})"
                    )
            return pn_violation(args.tau, args.y, t, cfg.n_max, **tol)
        if args.x is None:
            raise DomainError("--family xyt requires --x or --tau")
        return pn_centered_xyt(XYTState(args.x, args.y, t), cfg.n_max, **tol)
    if fam == "two-mode":
        if args.s1 is None or args.s2 is None:
            raise DomainError("--family two-mode requires --s1 and --s2")
        return two_mode_p2k_distribution(args.s1, args.s2, cfg.n_max, **tol)
    return deformed_distribution(_deformation_from_args(args), cfg.n_max, **tol)


# ---------------------------------------------------------------------------
# subcommands
# ---------------------------------------------------------------------------


def _cmd_dist(args) -> int:
    cfg = RunConfig(
        command="dist",
        family=args.family,
        n_max=args.n_max,
        tol_imag=args.tol_imag,
        tol_neg=args.tol_neg,
        output_format=args.format,
    )
    dist = _build_distribution(args, cfg)
    if cfg.output_format == "json":
        _emit(distribution_to_json(dist) + "\n", args.out)
    else:
        _emit(distribution_to_csv(dist), args.out)
    return 0


def _entropy_report_json(report: EntropyReport) -> dict:
    return {
        "h_joint": report.h_joint,
        "h_sub1": report.h_sub1,
        "h_sub2": report.h_sub2,
        "information": report.information,
        "subadditive": report.subadditive,
    }


def _complex_report_json(report: ComplexEntropyReport) -> dict:
    def c(z: complex) -> dict:
        return {"re": z.real, "im": z.imag}

    return {
        "h_joint": c(report.h_joint),
        "h_sub1": c(report.h_sub1),
        "h_sub2": c(report.h_sub2),
        "information": c(report.information),
        "branch_index": report.branch_index,
        "reading": report.reading,
    }


def _cmd_entropy(args) -> int:
    cfg = RunConfig(
        command="entropy",
        family=args.family,
        n_max=args.n_max,
        partition_m=args.partition,
        tol_imag=args.tol_imag,
        tol_neg=args.tol_neg,
        output_format=args.format,
        branch=args.branch,
    )
    dist = _build_distribution(args, cfg)
    scheme = PartitionScheme(cfg.partition_m)
    try:
        report = block_entropies(dist, scheme)
        payload = _entropy_report_json(report)
        rows = [
            "h_joint,h_sub1,h_sub2,information,subadditive",
            ",".join(
                [
                    _fmt(report.h_joint),
                    _fmt(report.h_sub1),
                    _fmt(report.h_sub2),
                    _fmt(report.information),
                    str(report.subadditive).lower(),
                ]
            ),
        ]
    except ClassificationError:
        sys.stderr.write(
            f"notice: classification {dist.classification.value}; "
            "reporting complex information\n"
        )
        creport = complex_information(dist, scheme, branch=cfg.branch)
        payload = _complex_report_json(creport)
        rows = [
            "h_joint_re,h_joint_im,h_sub1_re,h_sub1_im,h_sub2_re,h_sub2_im,"
            "information_re,information_im,branch,reading",
            ",".join(
                [
                    _fmt(creport.h_joint.real),
                    _fmt(creport.h_joint.imag),
                    _fmt(creport.h_sub1.real),
                    _fmt(creport.h_sub1.imag),
                    _fmt(creport.h_sub2.real),
                    _fmt(creport.h_sub2.imag),
                    _fmt(creport.information.real),
                    _fmt(creport.information.imag),
                    str(creport.branch_index),
                    creport.reading,
                ]
            ),
        ]
    if cfg.output_format == "json":
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        _emit("\n".join(rows) + "\n", args.out)
    return 0


def _cmd_inequality(args) -> int:
    cfg = RunConfig(
        command="inequality",
        family=args.family,
        n_max=args.n_max,
        partition_m=args.partition,
        tol_imag=args.tol_imag,
        tol_neg=args.tol_neg,
        output_format=args.format,
        branch=args.branch,
    )
    scheme = PartitionScheme(cfg.partition_m)
    form = "block-partition"
    margin = None
    if args.family == "gaussian" and args.form in ("hermite", "laguerre"):
        if not args.state:
            raise DomainError("--family gaussian requires --state <json>")
        state = _load_state(args.state)
        if args.form == "hermite":
            margin = hermite_inequality_margin(state, cfg.n_max)
            form = "hermite-pair"
        else:
            margin = laguerre_inequality_margin(state, cfg.n_max)
            form = "laguerre-pair"
        dist = pn_hermite(state, cfg.n_max)
    else:
        dist = _build_distribution(args, cfg)
    try:
        report = block_entropies(dist, scheme)
    except ClassificationError:
        sys.stderr.write(
            f"notice: classification {dist.classification.value}; "
            "reporting complex information\n"
        )
        creport = complex_information(dist, scheme, branch=cfg.branch)
        payload = _complex_report_json(creport)
        payload["form"] = "complex-" + creport.reading
        _emit(json.dumps(payload) + "\n", args.out)
        return 0
    if margin is None:
        margin = report.information
    payload = _entropy_report_json(report)
    payload["margin"] = margin
    payload["form"] = form
    if args.family == "poisson":
        alpha = args.alpha if args.alpha is not None else 0.0
        payload["parity_entropy_closed_form"] = poisson_parity_information(
            alpha * alpha
        )
    if cfg.output_format == "json":
        _emit(json.dumps(payload) + "\n", args.out)
    else:
        keys = sorted(payload)
        rows = [
            ",".join(keys),
            ",".join(
                _fmt(payload[k]) if isinstance(payload[k], float) else str(payload[k])
                for k in keys
            ),
        ]
        _emit("\n".join(rows) + "\n", args.out)
    return 0


def _cmd_violation(args) -> int:
    cfg = RunConfig(
        command="violation",
        n_max=args.n_max,
        partition_m=args.partition,
        tol_imag=args.tol_imag,
        tol_neg=args.tol_neg,
        branch=args.branch,
    )
    if args.tau_step <= 0:
        raise DomainError("--tau-step must be positive")
    taus = np.arange(args.tau_min, args.tau_max + args.tau_step / 2, args.tau_step)
    scheme = PartitionScheme(cfg.partition_m)
    lines = [
        "tau,x,slack,classification,mean_value,mean_abs,"
        "i_blocked_re,i_blocked_im,i_verbatim_re,i_verbatim_im"
    ]
    tol = dict(tol_imag=cfg.tol_imag, tol_neg=cfg.tol_neg)
    for tau in taus:
        tau = float(tau)
        xyt = from_tau(tau, args.y, args.t)
        verdict = uncertainty_check(xyt.to_state())
        try:
            dist = pn_centered_xyt(xyt, cfg.n_max, **tol)
            label = dist.classification.value
        except SingularDenominatorError:
            dist, label = None, "Singular"
        try:
            mean = mean_photon_xyt(xyt.x, xyt.y)
            mean_s, mean_a = _fmt(mean), _fmt(abs(mean))
        except SingularDenominatorError:
            mean_s = mean_a = "nan"
        # the complex entropies are defined over the tau family; below the
        # boundary the plain distribution carries them (real information)
        if tau >= 0:
            try:
                dist_i = pn_violation(tau, args.y, args.t, cfg.n_max, **tol)
            except (NormalizationError, SingularDenominatorError):
                dist_i = None
        else:
            dist_i = dist
        cols = [_fmt(tau), _fmt(xyt.x), _fmt(verdict.slack), label, mean_s, mean_a]
        for reading in ("blocked", "verbatim"):
            if dist_i is None:
                cols += ["nan", "nan"]
                continue
            try:
                rep = complex_information(dist_i, scheme, cfg.branch, reading)
                cols += [_fmt(rep.information.real), _fmt(rep.information.imag)]
            except (DivergentSeriesError, ClassificationError):
                cols += ["nan", "nan"]
        lines.append(",".join(cols))
    _emit("\n".join(lines) + "\n", args.out)
    return 0


_FIGURE_DEFAULTS = {
    # figure id: (parameter name, start, stop, step)
    1: ("x_bar", 0.0, 10.0, 0.05),
    2: ("x_bar", 0.0, 10.0, 0.05),
    3: ("alpha", 0.02, 2.0, 0.02),
    4: ("r", 0.0, 3.0, 0.02),
}


def _figure_value(fig: int, value: float) -> float:
    if fig == 1:
        return poisson_parity_information(value)
    if fig == 2:
        dist = deformed_distribution(
            DeformationSpec(DeformationKind.POISSON, alpha_mag2=value), 256
        )
        return block_entropies(dist, PartitionScheme(3)).information
    if fig == 3:
        dist = deformed_distribution(
            DeformationSpec(DeformationKind.Q_COHERENT, alpha_mag2=value * value, lam=2.0)
        )
        return block_entropies(dist, PartitionScheme(2)).information
    if fig == 4:
        dist = deformed_distribution(
            DeformationSpec(DeformationKind.SQUEEZED_VACUUM, r=value), 6000
        )
        return block_entropies(dist, PartitionScheme(3)).information
    raise DomainError(f"unknown figure id {fig}")


def _cmd_figures(args) -> int:
    if args.fig not in _FIGURE_DEFAULTS:
        raise DomainError(f"unknown figure id {args.fig}")
    name, start, stop, step = _FIGURE_DEFAULTS[args.fig]
    if args.param_min is not None:
        start = args.param_min
    if args.param_max is not None:
        stop = args.param_max
    if args.param_step is not None:
        step = args.param_step
    if step <= 0:
        raise DomainError("--param-step must be positive")
    lines = [f"{name},information"]
    for value in np.arange(start, stop + step / 2, step):
        value = float(value)
        lines.append(f"{_fmt(value)},{_fmt(_figure_value(args.fig, value))}")
    _emit("\n".join(lines) + "\n", args.out)
    return 0


def _cmd_oracle(args) -> int:
    cfg = OracleGridConfig() if not args.empty_grid else OracleGridConfig.empty()
    verdicts = run_suite(cfg)
    _emit(verdicts_to_json_lines(verdicts), args.out)
    return 0 if suite_passed(verdicts) else 1


# ---------------------------------------------------------------------------
# parser
# ---------------------------------------------------------------------------


def _add_family_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--family", choices=_FAMILIES, required=True)
    sub.add_argument("--state", metavar="JSON", help="gaussian state descriptor file")
    sub.add_argument("--route", choices=("hermite", "laguerre"), default="hermite",
                     help="representation for --family gaussian")
    sub.add_argument("--x", type=float)
    sub.add_argument("--y", type=float)
    sub.add_argument("--t", type=float, default=0.0)
    sub.add_argument("--tau", type=float)
    sub.add_argument("--s1", type=float)
    sub.add_argument("--s2", type=float)
    sub.add_argument("--r", type=float, default=0.0)
    sub.add_argument("--theta", type=float, default=0.0)
    sub.add_argument("--alpha", type=float)
    sub.add_argument("--lambda", dest="lam", type=float, default=1.0)
    sub.add_argument("--f-values", help="comma-separated f(0),f(1),... (empty = all ones)")
    sub.add_argument("--f-convention", choices=("sqrt-factorial", "factorial"),
                     default="sqrt-factorial")
    sub.add_argument("--mean-q", type=float, default=0.0)
    sub.add_argument("--mean-p", type=float, default=0.0)


def _add_common_options(sub: argparse.ArgumentParser) -> None:
    sub.add_argument("--n-max", type=int, default=None)
    sub.add_argument("--partition", type=int, default=2)
    sub.add_argument("--tol-imag", type=float, default=DEFAULT_TOL_IMAG)
    sub.add_argument("--tol-neg", type=float, default=DEFAULT_TOL_NEG)
    sub.add_argument("--branch", type=int, default=0)
    sub.add_argument("--format", choices=("csv", "json"), default="csv")
    sub.add_argument("--out", metavar="PATH")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="photonstat",
        description="Photon-number distributions, block-partition information, "
        "and uncertainty-violation diagnostics",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("dist", help="emit a photon-number distribution")
    _add_family_options(p)
    _add_common_options(p)
    p.set_defaults(func=_cmd_dist)

    p = subs.add_parser("entropy", help="block-partition entropy report")
    _add_family_options(p)
    _add_common_options(p)
    p.set_defaults(func=_cmd_entropy)

    p = subs.add_parser("inequality", help="entropy-inequality margin report")
    _add_family_options(p)
    _add_common_options(p)
    p.add_argument("--form", choices=("hermite", "laguerre", "block"), default="block")
    p.set_defaults(func=_cmd_inequality)

    p = subs.add_parser("violation", help="tau sweep over the uncertainty boundary")
    p.add_argument("--tau-min", type=float, default=-1.0)
    p.add_argument("--tau-max", type=float, default=5.0)
    p.add_argument("--tau-step", type=float, default=0.1)
    p.add_argument("--y", type=float, required=True)
    p.add_argument("--t", type=float, default=0.0)
    _add_common_options(p)
    p.set_defaults(func=_cmd_violation)

    p = subs.add_parser("figures", help="two-column CSV information sweeps")
    p.add_argument("--fig", type=int, required=True, choices=(1, 2, 3, 4))
    p.add_argument("--param-min", type=float)
    p.add_argument("--param-max", type=float)
    p.add_argument("--param-step", type=float)
    _add_common_options(p)
    p.set_defaults(func=_cmd_figures)

    p = subs.add_parser("oracle", help="run the independent cross-check suite")
    p.add_argument("--empty-grid", action="store_true",
                   help="run with empty grids (no checks)")
    _add_common_options(p)
    p.set_defaults(func=_cmd_oracle)

    return parser


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except PhotonStatError as exc:
        for etype, code in _REASON_CODES:
            if isinstance(exc, etype):
                break
        else:
            code = "internal-error"
        sys.stderr.write(f"error: {code}: {exc}\n")
        return 1


if __name__ == "__main__":
    sys.exit(main())
