"""Command-line front end.

Every command prints a plain-text report with stable ordering and the seed
it ran with.  Exit codes: 0 success / HOLDS / PASS, 1 REFUTED / FAIL /
violations found, 2 trivial pair, 3 parse error, 4 limit exceeded,
5 any other error.
"""

from __future__ import annotations

import argparse
import sys
from dataclasses import dataclass
from pathlib import Path

from .digraph import (
    DEFAULT_WALK_LIMIT,
    DigraphParseError,
    LimitExceeded,
    LwDigraph,
    Multigraph,
    _real_arcs,
    best_walks,
    corollary_walk_check,
    digraph_matrices,
    enumerate_multiwalks,
    enumerate_walks,
    expand_double,
    multigraph_matrices,
    parse_digraph,
    single_arcs,
    walk_weight,
)
from .matrix import MatrixParseError, format_matrix, mat_mul
from .polytope import dump_config_set, vertices
from .semiring import SupertropScalar, format_scalar
from .verifier import (
    HOLDS,
    REFUTED,
    TRIVIAL_PAIR,
    DEFAULT_PRUNE_ABOVE,
    CertificateError,
    certificate_from_text,
    check_lemma_nu_equiv,
    check_lemma_nu_pair,
    config_sets,
    default_max_set,
    fuzz_check,
    lift_to_supertropical,
    search_identities,
    verify_trop,
)
from .words import (
    TrivialPairError,
    WordParseError,
    compose_identity,
    evaluate,
    format_identity,
    parse_identity,
    parse_word,
)

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_TRIVIAL = 2
EXIT_PARSE = 3
EXIT_LIMIT = 4
EXIT_ERROR = 5

VERDICT_EXIT = {HOLDS: EXIT_OK, REFUTED: EXIT_FAIL, TRIVIAL_PAIR: EXIT_TRIVIAL}


class UsageError(RuntimeError):
    pass


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple[str, ...]
    n: int | None
    seed: int
    trials: int
    max_len: int | None
    max_set: int
    prune: bool
    prune_above: int
    out: str | None

    def header(self) -> list[str]:
        return [f"command: {self.command}", f"seed: {self.seed}"]


def _config(args: argparse.Namespace) -> RunConfig:
    max_set = args.max_set if args.max_set is not None else default_max_set()
    if args.n is not None and args.n < 1:
        raise UsageError("--n must be at least 1")
    return RunConfig(
        command=args.command,
        inputs=tuple(getattr(args, "inputs", None) or ()),
        n=args.n,
        seed=args.seed,
        trials=args.trials,
        max_len=args.max_len,
        max_set=max_set,
        prune=args.prune,
        prune_above=args.prune_above,
        out=args.out,
    )


def _read(path: str) -> str:
    return Path(path).read_text(encoding="utf-8")


def _emit(lines: list[str], out: str | None = None, artifact: str | None = None) -> None:
    """Report to stdout; the artifact goes to ``out`` or follows the report."""
    sys.stdout.write("".join(line + "\n" for line in lines))
    if artifact is not None:
        if out:
            Path(out).write_text(artifact, encoding="utf-8")
        else:
            sys.stdout.write(artifact)


def _require_n(cfg: RunConfig) -> int:
    if cfg.n is None:
        raise UsageError(f"{cfg.command} needs --n")
    return cfg.n


# -- commands -----------------------------------------------------------------


def cmd_verify(cfg: RunConfig) -> int:
    n = _require_n(cfg)
    identity = parse_identity(_read(cfg.inputs[0]))
    cert = verify_trop(n, identity, cfg.prune, cfg.max_set, cfg.prune_above)
    lines = cfg.header() + [
        f"identity: {identity}",
        f"n: {n}",
        f"prune: {str(cfg.prune).lower()}",
        f"prune_above: {cfg.prune_above}",
        f"max_set: {cfg.max_set}",
        f"verdict: {cert.verdict}",
    ]
    if cert.witness is not None:
        w = cert.witness
        lines += [
            f"witness entry: {w.entry[0]},{w.entry[1]}",
            f"witness reason: {w.reason}",
            f"u value: {format_scalar(w.u_value)}",
            f"v value: {format_scalar(w.v_value)}",
            f"A: {format_matrix(w.A).strip()}",
            f"B: {format_matrix(w.B).strip()}",
        ]
        if w.direction is not None:
            lines.append("direction: " + " ".join(str(x) for x in w.direction))
    lines.append(f"certificate sha256: {cert.digest()}")
    _emit(lines, cfg.out, cert.to_text())
    return VERDICT_EXIT[cert.verdict]


def cmd_compose(cfg: RunConfig, cert_paths: tuple[str | None, str | None], require: bool) -> int:
    outer = parse_identity(_read(cfg.inputs[0]))
    inner = parse_identity(_read(cfg.inputs[1]))
    problems = []
    certs = []
    for role, path in zip(("outer", "inner"), cert_paths):
        if path is None:
            problems.append(f"no certificate for the {role} identity")
            certs.append(None)
            continue
        cert = certificate_from_text(_read(path))
        if cert.verdict != HOLDS:
            problems.append(f"{role} certificate verdict is {cert.verdict}")
        elif not cert.validate():
            problems.append(f"{role} certificate failed re-validation")
        certs.append(cert)
    if problems and require:
        for p in problems:
            sys.stderr.write(f"error: {p}\n")
        return EXIT_ERROR
    lines = cfg.header() + [f"outer: {outer}", f"inner: {inner}"]
    if problems:
        for p in problems:
            sys.stderr.write(f"warning: {p}\n")
        composed = compose_identity(outer, inner)
        comments = [
            "UNCERTIFIED composition u[u'/v'], v[u'/v']",
            f"outer: {outer}",
            f"inner: {inner}",
        ] + [f"missing: {p}" for p in problems]
        lines.append("certified: false")
    else:
        lifted = lift_to_supertropical(outer, inner, certs[0], certs[1])
        composed = lifted.identity
        comments = lifted.provenance()
        lines.append("certified: true")
        lines.append(f"n: {lifted.n}")
    lines.append(f"composed: {composed}")
    _emit(lines, cfg.out, format_identity(composed, comments))
    return EXIT_OK


def _fuzz_lines(res) -> list[str]:
    lines = [f"result: {'PASS' if res.passed else 'FAIL'}", f"trials run: {res.trials}"]
    lines += [f"warning: {w}" for w in res.warnings]
    ce = res.counterexample
    if ce is not None:
        lines += [
            f"counterexample trial: {ce.trial}",
            f"entry: {ce.entry[0]},{ce.entry[1]}",
            f"u value: {format_scalar(ce.u_value)}",
            f"v value: {format_scalar(ce.v_value)}",
            f"A: {format_matrix(ce.A).strip()}",
            f"B: {format_matrix(ce.B).strip()}",
        ]
    return lines


def cmd_fuzz(cfg: RunConfig, kind: str, lemma: str | None, pair_mode: str, cert_path: str | None) -> int:
    n = _require_n(cfg)
    identity = parse_identity(_read(cfg.inputs[0]))
    cert = certificate_from_text(_read(cert_path)) if cert_path else None
    lines = cfg.header() + [f"identity: {identity}", f"n: {n}", f"trials: {cfg.trials}"]
    if lemma is None:
        res = fuzz_check(n, identity, kind, cfg.trials, cfg.seed)
        lines.append(f"check: identity over {kind}")
    elif lemma == "nu-equiv":
        res = check_lemma_nu_equiv(n, identity, cfg.trials, cfg.seed, cert)
        lines.append("check: sides nu-equivalent on supertropical pairs")
    else:
        res = check_lemma_nu_pair(n, identity, cfg.trials, cfg.seed, cert, mode=pair_mode)
        lines.append(f"check: exact equality on nu-equivalent pairs (mode {pair_mode})")
    lines += _fuzz_lines(res)
    _emit(lines, cfg.out)
    return EXIT_OK if res.passed else EXIT_FAIL


def _as_multigraph(G) -> tuple[Multigraph, Multigraph]:
    """(graph for counting walks, double-arc graph for the walk check)."""
    if isinstance(G, Multigraph):
        return G, G
    A, B = digraph_matrices(G, "st")
    return single_arcs(G), expand_double(A, B)


def _values(G, w):
    if isinstance(G, Multigraph):
        A, B = multigraph_matrices(G)
    else:
        A, B = digraph_matrices(G, "st")
    return evaluate(w, A, B, mat_mul)


def _max_listing(G, w, i: int, j: int, best, limit: int) -> list[str]:
    if best is None:
        return []
    if isinstance(G, LwDigraph):
        walks = enumerate_walks(G, w, i, j, limit)
        keep = []
        for g in walks:
            x = walk_weight(G, g)
            if (x.mag if isinstance(x, SupertropScalar) else x.value) == best:
                keep.append(f"  walk {g}  weight {format_scalar(x)}")
        return keep
    arcs = _real_arcs(G)
    out = []
    for walk in enumerate_multiwalks(G, w, i, j, limit):
        if sum(arcs[k].weight.mag for k in walk) != best:
            continue
        text = str(i) + "".join(f" -{arcs[k].label}#{k}-> {arcs[k].dst}" for k in walk)
        out.append(f"  walk {text}")
    return out


def cmd_walks(cfg: RunConfig, words: list[str], list_max: bool, limit: int) -> int:
    G = parse_digraph(_read(cfg.inputs[0]))
    ws = [parse_word(x) for x in words]
    counting, doubled = _as_multigraph(G)
    lines = cfg.header() + [
        f"nodes: {G.n}",
        f"graph: {'multigraph' if isinstance(G, Multigraph) else 'lw-digraph'}",
    ]
    for w in ws:
        lines.append(f"word: {w}")
        vals = _values(G, w)
        counts = best_walks(counting, w)
        for (i, j), (best, count) in sorted(counts.items()):
            lines.append(f"entry {i},{j}: max {format_scalar(vals[i, j])} walks at max {count}")
            if list_max:
                lines += _max_listing(G, w, i, j, best, limit)
    status = EXIT_OK
    if len(ws) == 2:
        rep = corollary_walk_check(doubled, ws[0], ws[1])
        lines.append(f"walk check: {ws[0]} vs {ws[1]} on the double-arc graph")
        for (i, j), (wu, cu, wv, cv) in sorted(rep.entries.items()):
            lines.append(f"entry {i},{j}: u best {_fmt(wu)} x{cu}  v best {_fmt(wv)} x{cv}")
        lines.append(f"weight violations: {_pairs(rep.weight_violations)}")
        lines.append(f"uniqueness violations: {_pairs(rep.uniqueness_violations)}")
        status = EXIT_OK if rep.ok else EXIT_FAIL
    elif len(ws) > 2:
        raise UsageError("walks takes one or two words")
    _emit(lines, cfg.out)
    return status


def _fmt(x) -> str:
    return "-inf" if x is None else str(x)


def _pairs(ps) -> str:
    return " ".join(f"{i},{j}" for i, j in ps) if ps else "none"


def cmd_hull(cfg: RunConfig, word: str) -> int:
    n = _require_n(cfg)
    w = parse_word(word)
    sets = config_sets(n, w, cfg.prune, cfg.max_set, cfg.prune_above)
    lines = cfg.header() + [
        f"word: {w}",
        f"n: {n}",
        f"prune: {str(cfg.prune).lower()}",
        f"prune_above: {cfg.prune_above}",
    ]
    for (i, j), omega in sorted(sets.items()):
        rep = vertices(omega)
        notes = {p: "vertex" for p in rep.vertices}
        notes.update({p: "quasi" for p in rep.quasi})
        lines.append(f"entry {i},{j}")
        lines += dump_config_set(omega, notes).splitlines()
    _emit(lines, cfg.out)
    return EXIT_OK


def cmd_search(cfg: RunConfig, budget: int) -> int:
    n = _require_n(cfg)
    max_len = cfg.max_len if cfg.max_len is not None else 6
    res = search_identities(n, max_len, budget=budget, trials=cfg.trials, seed=cfg.seed)
    lines = cfg.header() + [f"n: {n}", f"max_len: {max_len}", f"budget: {budget}"]
    lines += res.log
    lines += [f"certified: {ident}" for ident, _ in res.found]
    _emit(lines, cfg.out)
    return EXIT_OK


# -- argument parsing ----------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--n", type=int, help="matrix size")
    common.add_argument("--seed", type=int, default=0, help="seed for all randomness (default 0)")
    common.add_argument("--trials", type=int, default=1000, help="random trials (default 1000)")
    common.add_argument("--max-len", type=int, help="maximum word length for search")
    common.add_argument("--max-set", type=int, help="DP set-size limit (env STID_MAX_SET)")
    common.add_argument(
        "--prune", action=argparse.BooleanOptionalAction, default=True, help="prune DP sets to hull vertices"
    )
    common.add_argument(
        "--prune-above",
        type=int,
        default=DEFAULT_PRUNE_ABOVE,
        help=f"prune only sets larger than this (default {DEFAULT_PRUNE_ABOVE}; 2 prunes every step)",
    )
    common.add_argument("--out", help="write the artifact (certificate, identity, report) here")

    p = argparse.ArgumentParser(prog="stid", description="Tropical and supertropical matrix identities.")
    sub = p.add_subparsers(dest="command", required=True)

    v = sub.add_parser("verify", parents=[common], help="decide an identity for tropical n x n matrices")
    v.add_argument("inputs", nargs=1, metavar="IDENTITY")

    c = sub.add_parser("compose", parents=[common], help="compose two identities (outer[inner])")
    c.add_argument("inputs", nargs=2, metavar=("OUTER", "INNER"))
    c.add_argument("--cert-outer", help="tropical certificate of the outer identity")
    c.add_argument("--cert-inner", help="tropical certificate of the inner identity")
    c.add_argument("--require-cert", action="store_true", help="fail unless both certificates hold")

    f = sub.add_parser("fuzz", parents=[common], help="exact randomized evaluation of an identity")
    f.add_argument("inputs", nargs=1, metavar="IDENTITY")
    f.add_argument("--kind", choices=("trop", "st"), default="st")
    f.add_argument("--lemma", choices=("nu-equiv", "nu-pair"), help="run a lemma check instead")
    f.add_argument("--pair-mode", choices=("retag", "nu", "hat", "same"), default="retag")
    f.add_argument("--cert", help="tropical certificate required by the lemma checks")

    w = sub.add_parser("walks", parents=[common], help="maximal walks on a labeled digraph")
    w.add_argument("inputs", nargs=1, metavar="DIGRAPH")
    w.add_argument("words", nargs="+", metavar="WORD")
    w.add_argument("--list-max", action="store_true", help="list every walk attaining the maximum")
    w.add_argument("--limit", type=int, default=DEFAULT_WALK_LIMIT, help="walk enumeration limit")

    h = sub.add_parser("hull", parents=[common], help="dump configuration sets with vertex flags")
    h.add_argument("word")

    s = sub.add_parser("search", parents=[common], help="bounded search for identities")
    s.add_argument("--budget", type=int, default=10_000)
    return p


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        if args.command == "verify":
            return cmd_verify(cfg)
        if args.command == "compose":
            return cmd_compose(cfg, (args.cert_outer, args.cert_inner), args.require_cert)
        if args.command == "fuzz":
            return cmd_fuzz(cfg, args.kind, args.lemma, args.pair_mode, args.cert)
        if args.command == "walks":
            return cmd_walks(cfg, args.words, args.list_max, args.limit)
        if args.command == "hull":
            return cmd_hull(cfg, args.word)
        return cmd_search(cfg, args.budget)
    except (WordParseError, MatrixParseError, DigraphParseError, CertificateError) as exc:
        sys.stderr.write(f"parse error: {exc}\n")
        return EXIT_PARSE
    except LimitExceeded as exc:
        sys.stderr.write(f"limit exceeded: {exc}\n")
        return EXIT_LIMIT
    except (TrivialPairError, UsageError, OSError, ValueError) as exc:
        sys.stderr.write(f"error: {exc}\n")
        return EXIT_ERROR


if __name__ == "__main__":
    sys.exit(main())
