"""Command-line entry point: ``hgk <subcommand> ...``.

Exit status is 0 on success, 1 when a bound or oracle check fails and 2 on
bad input (malformed file, invalid parameters, cap exceeded).
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

from . import config
from .clique import clique_kernel, clique_oracle
from .decomposition import caterpillar_decomposition, decomposition_report
from .domset import domination_number_chordal, domination_number_tgraph, domset_oracle
from .domset.chordal import clique_tree
from .domset.pipeline import format_witness
from .domset.transform import dissolve_degree_two
from .errors import HGKError
from .generators import (
    MulticolorInstance,
    RandomParams,
    pad_parts,
    random_hgraph,
    random_multicolored,
    random_small_multigraph,
    random_tgraph,
    make_rng,
    reduce_mcc_to_is,
    reduce_mis_to_ds,
    theta_instance,
)
from .graph import SimpleGraph
from .io import dumps_gr, dumps_hgr, loads_parts, read_gr, read_graph_or_rep, read_hgr
from .model import HRepresentation
from .separators import (
    format_separator,
    hgraph_minimal_separators,
    minimal_separators_oracle,
    separator_count_limit,
    sort_separators,
)
from .verify import FAMILIES, Report, record, verify_suite

OK, CHECK_FAILED, INPUT_ERROR = 0, 1, 2


class InputError(Exception):
    pass


@dataclass
class RunConfig:
    subcommand: str
    seed: int = 0
    cap: int | None = None
    threads: int = 1
    out: Path | None = None
    args: argparse.Namespace = field(default_factory=argparse.Namespace)


def _emit(cfg: RunConfig, text: str, suffix_path: Path | None = None) -> None:
    target = suffix_path or cfg.out
    if target is None:
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)


def _emit_report(cfg: RunConfig, rpt: Report, body: str = "") -> None:
    """Writes the body (or the TSV when there is none) and a JSON mirror next to it."""
    text = body or rpt.to_tsv()
    if cfg.out is None:
        sys.stdout.write(text)
        return
    cfg.out.write_text(text)
    cfg.out.with_name(cfg.out.name + ".json").write_text(rpt.to_json())


def _status(rpt: Report) -> int:
    return OK if rpt.ok else CHECK_FAILED


def _require_rep(obj, path) -> HRepresentation:
    if not isinstance(obj, HRepresentation):
        raise InputError(f"{path}: this subcommand needs an .hgr representation")
    return obj


# ------------------------------------------------------------------ commands


def cmd_decompose(cfg: RunConfig) -> int:
    a = cfg.args
    rep = read_hgr(a.input)
    if a.root is not None and a.root not in rep.base.nodes:
        raise InputError(f"root {a.root!r} is not a branching node")
    ds = tuple(sorted({1, a.nec_d}))
    dec = caterpillar_decomposition(rep, a.root)
    dr = decomposition_report(rep, dec, ds=ds)
    lines = ["node\tsize\tmim\tnec_d\tboolw_cut\tbound_ok"]
    rpt = Report()
    for c in dr.cuts:
        nec = c.nec.get(a.nec_d, (None,))[0]
        boolw = "" if c.boolw is None else f"{c.boolw:.6g}"
        lines.append(f"{c.node}\t{c.size}\t{'' if c.mim is None else c.mim}\t{'' if nec is None else nec}"
                     f"\t{boolw}\t{'true' if c.ok else 'false'}")
        rpt.extend([record(c.node, "cut_bounds", c.mim, 2 * dr.num_edges_h, c.ok)])
    target = a.report or cfg.out
    text = "\n".join(lines) + "\n"
    if target is None:
        sys.stdout.write(text)
    else:
        Path(target).write_text(text)
        Path(str(target) + ".json").write_text(rpt.to_json())
    return _status(rpt)


def cmd_separators(cfg: RunConfig) -> int:
    a = cfg.args
    obj = read_graph_or_rep(a.input)
    rpt = Report()
    if isinstance(obj, HRepresentation):
        g = obj.graph
        seps = hgraph_minimal_separators(obj)
        if a.oracle:
            want = minimal_separators_oracle(g)
            rpt.extend([record("input", "separator_complete", len(seps), len(want), seps == want)])
        bound = separator_count_limit(g.n, obj.base.num_edges)
    else:
        g = obj
        seps = minimal_separators_oracle(g)
        bound = None
    lines = [format_separator(x) for x in sort_separators(seps)]
    lines.append(f"count {len(seps)}")
    if a.bound_check:
        if bound is None:
            raise InputError("--bound-check needs an .hgr input")
        ok = len(seps) <= bound
        rpt.extend([record("input", "separator_count_bound", len(seps), bound, ok)])
        lines.append(f"bound {bound} {'ok' if ok else 'violated'}")
    _emit_report(cfg, rpt, "\n".join(lines) + "\n")
    return _status(rpt)


def cmd_domset(cfg: RunConfig) -> int:
    a = cfg.args
    obj = read_graph_or_rep(a.input)
    if isinstance(obj, SimpleGraph):
        g = obj
        trees = [clique_tree(g.induced_subgraph(c)) for c in g.components()]
        leaves = max((len(dissolve_degree_two(t).base.leaves()) for t in trees), default=0)
    else:
        g = obj.graph
        leaves = len(dissolve_degree_two(obj).base.leaves())
    if a.max_leaves is not None and leaves > a.max_leaves:
        raise InputError(f"tree has {leaves} leaves, more than --max-leaves {a.max_leaves}")
    if isinstance(obj, SimpleGraph):
        sol = domination_number_chordal(g, a.literal)
    else:
        sol = domination_number_tgraph(obj, a.literal)
    verdict = sol.verdict(a.k)
    rpt = Report([record("input", "witness_valid", len(sol.witness), sol.value, sol.verified)])
    lines = [f"verdict {'yes' if verdict else 'no'}", f"value {sol.value}", f"witness {format_witness(sol.witness)}"]
    if a.oracle_check:
        want = domset_oracle(g)
        rpt.extend([record("input", "domset_oracle", sol.value, want, (want <= a.k) == verdict)])
        lines.append(f"oracle {want}")
    for key in sorted(sol.trace):
        lines.append(f"trace {key} {sol.trace[key]}")
    _emit_report(cfg, rpt, "\n".join(lines) + "\n")
    return _status(rpt)


def cmd_clique(cfg: RunConfig) -> int:
    a = cfg.args
    rep = _require_rep(read_graph_or_rep(a.input), a.input)
    if a.k < 1:
        raise InputError("--k must be positive")
    ker = clique_kernel(rep, a.k)
    rpt = Report([record("input", "kernel_size", ker.size, ker.bound, ker.size <= ker.bound)])
    lines = [f"kernel {ker.verdict}", f"size {ker.size}", f"bound {ker.bound}", f"original {rep.graph.n}"]
    if ker.verdict == "yes":
        verdict = True
        lines.append("certificate " + format_witness(ker.certificate))
    elif a.kernel_only:
        verdict = None
    else:
        omega, cl = clique_oracle(ker.reduced)
        verdict = omega >= a.k
        if verdict:
            lines.append("certificate " + format_witness(cl))
    if verdict is not None:
        lines.insert(0, f"verdict {'yes' if verdict else 'no'}")
    if a.oracle_check:
        omega = clique_oracle(rep.graph)[0]
        want = omega >= a.k
        kernel_says = verdict if verdict is not None else clique_oracle(ker.reduced)[0] >= a.k
        rpt.extend([record("input", "kernel_equiv", kernel_says, want, kernel_says == want)])
        lines.append(f"oracle_omega {omega}")
    if ker.reduced is not None:
        lines.append("kernel_graph")
        lines.append(dumps_gr(ker.reduced).rstrip("\n"))
    _emit_report(cfg, rpt, "\n".join(lines) + "\n")
    return _status(rpt)


def _multicolored_input(cfg: RunConfig) -> MulticolorInstance:
    a = cfg.args
    if a.input is not None:
        if a.parts is None:
            raise InputError("--input needs --parts")
        g = read_gr(a.input)
        parts = loads_parts(Path(a.parts).read_text(), g, str(a.parts))
        if not parts or any(not p for p in parts):
            raise InputError("parts file must list nonempty parts")
        seen = [v for p in parts for v in p]
        if len(seen) != len(set(seen)) or set(seen) != set(g.vertices):
            raise InputError("parts must partition the vertex set")
        return pad_parts(g, parts)
    if a.k < 2 or a.p < 1:
        raise InputError("need k >= 2 and p >= 1")
    return random_multicolored(a.k, a.p, cfg.seed, a.density)


def cmd_generate(cfg: RunConfig) -> int:
    a = cfg.args
    kind = a.kind
    if kind in ("reduction-is", "reduction-ds"):
        inst = _multicolored_input(cfg)
        out = reduce_mcc_to_is(inst) if kind == "reduction-is" else reduce_mis_to_ds(inst)
        text = f"# target {out.target}\n" + dumps_hgr(out.rep, kind.replace("-", "_"))
    elif kind == "theta":
        if a.r < 1 or a.k < 1:
            raise InputError("need r >= 1 and k >= 1")
        text = dumps_hgr(theta_instance(a.r, a.k), f"theta_{a.r}_{a.k}")
    else:
        if a.n < 1 or a.edges < 1:
            raise InputError("need n >= 1 and --edges >= 1")
        if a.tree:
            rep = random_tgraph(cfg.seed, a.n, max_leaves=a.max_leaves)
        else:
            h = random_small_multigraph(a.edges, make_rng(cfg.seed, 0))
            rep = random_hgraph(h, a.n, cfg.seed, RandomParams())
        text = dumps_hgr(rep, "random")
    _emit(cfg, text)
    return OK


def _suite_worker(job):
    seed, count, fam, mutate, timings, cap = job
    config.set_cap_override(cap)
    return verify_suite(seed, count, (fam,), mutate, timings).records


def cmd_verify(cfg: RunConfig) -> int:
    a = cfg.args
    if a.suite == "list":
        _emit(cfg, "\n".join(FAMILIES) + "\n")
        return OK
    fams = FAMILIES if a.suite == "all" else tuple(a.suite.split(","))
    bad = [f for f in fams if f not in FAMILIES]
    if bad:
        raise InputError(f"unknown check family {bad[0]!r}")
    if a.count < 1:
        raise InputError("--count must be positive")
    rpt = Report(timings=a.timings)
    if cfg.threads > 1 and len(fams) > 1:
        jobs = [(cfg.seed, a.count, f, a.inject_mismatch, a.timings, cfg.cap) for f in fams]
        with ProcessPoolExecutor(max_workers=cfg.threads) as pool:
            for recs in pool.map(_suite_worker, jobs):
                rpt.extend(recs)
    else:
        rpt = verify_suite(cfg.seed, a.count, fams, a.inject_mismatch, a.timings)
    _emit_report(cfg, rpt)
    n_fail = len(rpt.failures)
    print(f"{len(rpt.records)} records, {n_fail} failures", file=sys.stderr)
    return _status(rpt)


COMMANDS = {
    "decompose": cmd_decompose,
    "separators": cmd_separators,
    "domset": cmd_domset,
    "clique": cmd_clique,
    "generate": cmd_generate,
    "verify": cmd_verify,
}


# -------------------------------------------------------------------- parser


def _seed(text: str) -> int:
    v = int(text, 0)
    if not 0 <= v < 2**64:
        raise argparse.ArgumentTypeError("seed must fit in 64 bits")
    return v


def _positive(text: str) -> int:
    v = int(text)
    if v < 1:
        raise argparse.ArgumentTypeError("must be positive")
    return v


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=_seed, default=argparse.SUPPRESS, help="master seed (default 0)")
    common.add_argument("--cap", type=_positive, default=argparse.SUPPRESS, help="cap for every exhaustive routine")
    common.add_argument("--threads", type=_positive, default=argparse.SUPPRESS, help="worker processes for verify")
    common.add_argument("--out", type=Path, default=argparse.SUPPRESS, help="output path (stdout if omitted)")

    p = argparse.ArgumentParser(prog="hgk", parents=[common], description="Algorithms on H-graphs.")
    sub = p.add_subparsers(dest="subcommand", required=True)

    s = sub.add_parser("decompose", parents=[common], help="caterpillar decomposition and cut widths")
    s.add_argument("--input", required=True, type=Path)
    s.add_argument("--root")
    s.add_argument("--nec-d", type=_positive, default=1)
    s.add_argument("--report", type=Path)

    s = sub.add_parser("separators", parents=[common], help="minimal separators")
    s.add_argument("--input", required=True, type=Path)
    s.add_argument("--oracle", action="store_true", help="compare against exhaustive enumeration")
    s.add_argument("--bound-check", action="store_true")

    s = sub.add_parser("domset", parents=[common], help="minimum dominating set on T-graphs")
    s.add_argument("--input", required=True, type=Path)
    s.add_argument("--k", required=True, type=int)
    s.add_argument("--oracle-check", action="store_true")
    s.add_argument("--max-leaves", type=_positive)
    s.add_argument("--literal", action="store_true", help="use the unrepaired recurrences")

    s = sub.add_parser("clique", parents=[common], help="clique kernel")
    s.add_argument("--input", required=True, type=Path)
    s.add_argument("--k", required=True, type=int)
    s.add_argument("--kernel-only", action="store_true")
    s.add_argument("--oracle-check", action="store_true")

    s = sub.add_parser("generate", parents=[common], help="instance generators")
    s.add_argument("kind", choices=("reduction-is", "reduction-ds", "theta", "random"))
    s.add_argument("--input", type=Path, help=".gr graph for reductions")
    s.add_argument("--parts", type=Path, help="parts file for reductions")
    s.add_argument("--k", type=int, default=2)
    s.add_argument("--p", type=int, default=2)
    s.add_argument("--r", type=int, default=2)
    s.add_argument("--density", type=float)
    s.add_argument("--n", type=int, default=8)
    s.add_argument("--edges", type=int, default=2, help="multigraph edges for random H-graphs")
    s.add_argument("--tree", action="store_true", help="random T-graph instead")
    s.add_argument("--max-leaves", type=_positive, default=3)

    s = sub.add_parser("verify", parents=[common], help="run the cross-check suite")
    s.add_argument("--suite", default="all", help="all, list, or comma-separated families")
    s.add_argument("--count", type=int, default=50)
    s.add_argument("--timings", action="store_true")
    s.add_argument("--inject-mismatch", action="store_true", help="perturb the domset oracle to test failure paths")
    return p


def parse_config(argv=None) -> RunConfig:
    ns = build_parser().parse_args(argv)
    out = getattr(ns, "out", None)
    return RunConfig(
        subcommand=ns.subcommand,
        seed=getattr(ns, "seed", 0),
        cap=getattr(ns, "cap", None),
        threads=getattr(ns, "threads", 1),
        out=out.resolve() if out is not None else None,
        args=ns,
    )


def dispatch(cfg: RunConfig) -> int:
    config.set_cap_override(cfg.cap)
    try:
        return COMMANDS[cfg.subcommand](cfg)
    except (HGKError, InputError, OSError, ValueError) as exc:
        print(f"hgk {cfg.subcommand}: error: {exc}", file=sys.stderr)
        return INPUT_ERROR
    finally:
        config.set_cap_override(None)


def main(argv=None) -> int:
    try:
        cfg = parse_config(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    return dispatch(cfg)


if __name__ == "__main__":
    sys.exit(main())
