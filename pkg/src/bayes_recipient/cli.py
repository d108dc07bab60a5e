"""Command-line entry point.

    bayes-recipient lr-a --report-loglr 15 --prior-odds 1
    bayes-recipient lr-a --conclusion identified --validation tests.csv
    bayes-recipient fig2 --out fig2.csv
    bayes-recipient fig3 --n-list 1,10,100,1000
    bayes-recipient fig4 --log10
    bayes-recipient coin --model markov --seq HHHHHTTT
    bayes-recipient counterexample --rational
"""

import argparse
import sys
from fractions import Fraction

from . import coins, figures
from .categorical import Conclusion
from .continuous import VAGUE_PRIOR_H1, VAGUE_PRIOR_H2, NormalGamma
from .errors import ConvergenceError, DomainError, UsageError, ValidationFormatError
from .finite_space import two_coin_space
from .recipient import (
    ExpertReport,
    RecipientQuery,
    ReportKind,
    answer,
    read_validation_csv,
    summarize_validation,
)


def _n_list(text):
    try:
        values = [int(v) for v in text.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")
    if not values or any(v < 0 for v in values):
        raise argparse.ArgumentTypeError(f"expected nonnegative integers, got {text!r}")
    return values


def _add_prior_flags(p):
    g = p.add_argument_group("Normal-Gamma priors on the expert's log-LR")
    for i, prior in ((1, VAGUE_PRIOR_H1), (2, VAGUE_PRIOR_H2)):
        g.add_argument(f"--mu{i}", type=float, default=prior.mu0)
        g.add_argument(f"--nmu{i}", type=float, default=prior.n_mu)
        g.add_argument(f"--tau{i}", type=float, default=prior.tau0)
        g.add_argument(f"--ntau{i}", type=float, default=prior.n_tau)


def _priors(args):
    return (
        NormalGamma(args.mu1, args.nmu1, args.tau1, args.ntau1),
        NormalGamma(args.mu2, args.nmu2, args.tau2, args.ntau2),
    )


def _add_grid_flags(p):
    p.add_argument("--x-min", type=float, default=-40.0)
    p.add_argument("--x-max", type=float, default=40.0)
    p.add_argument("--step", type=float, default=0.5)


def _add_output_flags(p):
    p.add_argument("--out", default="-", help="output path (default: standard output)")
    p.add_argument("--log10", action="store_true", help="append a log10 LR column")


def _emit(text, path):
    if path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _num(value):
    return format(value, ".15g")


def cmd_lr_a(args):
    if args.report_loglr is not None:
        report = ExpertReport.numeric(args.report_loglr)
    elif args.report_lr is not None:
        report = ExpertReport.from_linear_lr(args.report_lr)
    else:
        report = ExpertReport.categorical(args.conclusion)
    prior_h1, prior_h2 = _priors(args)
    query = RecipientQuery(args.prior_odds, report, prior_h1, prior_h2)
    records = read_validation_csv(args.validation) if args.validation else []
    data = summarize_validation(records, kind=report.kind)
    result = answer(query, data)
    lines = ["quantity,value", f"lr_a,{_num(result.lr_a)}",
             f"posterior_odds,{_num(result.posterior_odds)}"]
    if result.hybrid is not None:
        lines.append(f"hybrid_posterior_odds,{_num(result.hybrid.value)}")
    _emit("\n".join(lines) + "\n", args.out)


def cmd_fig2(args):
    prior_h1, prior_h2 = _priors(args)
    table = figures.prior_curves(args.x_min, args.x_max, args.step, prior_h1, prior_h2, args.log10)
    _emit(table.to_csv(), args.out)


def cmd_fig3(args):
    prior_h1, prior_h2 = _priors(args)
    table = figures.validation_curves(
        args.n_list, args.x_min, args.x_max, args.step,
        args.mean1, args.var1, args.mean2, args.var2,
        prior_h1, prior_h2, args.log10,
    )
    _emit(table.to_csv(), args.out)


def cmd_fig4(args):
    table = figures.conclusion_heatmap(args.n_list, args.rate1, args.rate2, args.log10)
    _emit(table.to_csv(), args.out)


def cmd_coin(args):
    exact = args.rational
    if args.model == "fair":
        value = coins.coin_fair(args.seq, exact=exact)
    elif args.model == "beta":
        value = coins.coin_beta(args.seq, args.alpha0, args.beta0, exact=exact)
    else:
        value = coins.coin_markov(args.seq, args.weighting, exact=exact)
    text = str(value) if exact else _num(value)
    _emit(f"{text}\n", args.out)


def cmd_counterexample(args):
    space = two_coin_space(exact=args.rational)

    def show(x):
        return str(x) if isinstance(x, Fraction) else format(x, "g")

    def verdict(flag):
        return "yes" if flag else "no"

    lines = [
        "two independent fair tosses; A: first heads, B: second heads, C: tosses match",
        f"P(A) = {show(space.prob('A'))}",
        f"P(A|B) = {show(space.cond_prob('A', ['B']))}",
        f"P(A|C) = {show(space.cond_prob('A', ['C']))}",
        f"P(A|B,C) = {show(space.cond_prob('A', ['B', 'C']))}",
        f"A independent of B: {verdict(space.independent('A', 'B'))}",
        f"A independent of B given C: {verdict(space.cond_independent('A', 'B', ['C']))}",
    ]
    _emit("\n".join(lines) + "\n", args.out)


def build_parser():
    parser = argparse.ArgumentParser(
        prog="bayes-recipient",
        description="Likelihood ratios and posterior odds for a Bayesian recipient of expert evidence.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("lr-a", help="recipient LR, posterior odds and the hybrid contrast")
    p.add_argument("--prior-odds", type=float, default=1.0)
    report = p.add_mutually_exclusive_group(required=True)
    report.add_argument("--report-loglr", type=float, help="expert's natural-log LR")
    report.add_argument("--report-lr", type=float, help="expert's LR on the linear scale")
    report.add_argument("--conclusion", choices=[c.value for c in Conclusion])
    p.add_argument("--validation", help="CSV with header hypothesis,outcome")
    p.add_argument("--out", default="-")
    _add_prior_flags(p)
    p.set_defaults(func=cmd_lr_a)

    p = sub.add_parser("fig2", help="prior predictive curves and LR_A")
    _add_grid_flags(p)
    _add_prior_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_fig2)

    p = sub.add_parser("fig3", help="curves after validation summaries of several sizes")
    p.add_argument("--n-list", type=_n_list, default=list(figures.DEFAULT_FIG3_N))
    p.add_argument("--mean1", type=float, default=8.0)
    p.add_argument("--var1", type=float, default=25.0)
    p.add_argument("--mean2", type=float, default=-12.5)
    p.add_argument("--var2", type=float, default=25.0)
    _add_grid_flags(p)
    _add_prior_flags(p)
    _add_output_flags(p)
    p.set_defaults(func=cmd_fig3)

    p = sub.add_parser("fig4", help="LR for an 'identified' conclusion over validation sizes")
    p.add_argument("--n-list", type=_n_list, default=list(figures.DEFAULT_FIG4_N))
    p.add_argument("--rate1", type=float, default=0.95)
    p.add_argument("--rate2", type=float, default=0.05)
    _add_output_flags(p)
    p.set_defaults(func=cmd_fig4)

    p = sub.add_parser("coin", help="next-toss probability of heads under a coin model")
    p.add_argument("--model", choices=("fair", "beta", "markov"), default="beta")
    p.add_argument("--seq", default="HHHHHTTT")
    p.add_argument("--weighting", choices=coins.WEIGHTINGS, default="equal")
    p.add_argument("--alpha0", type=float, default=1.0)
    p.add_argument("--beta0", type=float, default=1.0)
    p.add_argument("--rational", action="store_true")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_coin)

    p = sub.add_parser("counterexample", help="pairwise independence vs conditioning on two coins")
    p.add_argument("--rational", action="store_true")
    p.add_argument("--out", default="-")
    p.set_defaults(func=cmd_counterexample)

    return parser


def main(argv=None):
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        args.func(args)
    except (DomainError, UsageError, ValidationFormatError, ConvergenceError, OSError) as exc:
        print(f"bayes-recipient: error: {exc}", file=sys.stderr)
        return 1
    return 0


if __name__ == "__main__":
    sys.exit(main())
