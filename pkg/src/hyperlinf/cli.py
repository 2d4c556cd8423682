"""Command-line interface.

Exit codes: 0 success, 1 a negative decision (no SDR, not symplectic, not
isomorphic, failed check), 2 malformed input or an exceeded resource cap.
Defaults can be overridden by a JSON config file named in the
``HYPERLINF_CONFIG`` environment variable.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from dataclasses import dataclass, fields, replace
from typing import Optional, Sequence

from . import cohomology, hypergraph, isomorphism, linfty, mcalg, symplectic
from .hypergraph import Hypergraph, HypergraphError
from .series import format_series

CONFIG_ENV = "HYPERLINF_CONFIG"


@dataclass(frozen=True)
class Config:
    max_degree: int = 6
    monomial_cap: int = cohomology.DEFAULT_MONOMIAL_CAP
    iso_vertex_cap: int = isomorphism.DEFAULT_VERTEX_CAP
    seed: int = 0
    output: str = "json"

    def __post_init__(self):
        for name in ("monomial_cap", "iso_vertex_cap"):
            if getattr(self, name) <= 0:
                raise ValueError(f"{name} must be positive")
        if self.max_degree < 0:
            raise ValueError("max_degree must be non-negative")
        if not 0 <= self.seed < 2**64:
            raise ValueError("seed must be a 64-bit unsigned integer")
        if self.output not in ("text", "json"):
            raise ValueError("output must be 'text' or 'json'")


def load_config(environ=os.environ) -> Config:
    path = environ.get(CONFIG_ENV)
    if not path:
        return Config()
    with open(path) as fh:
        doc = json.load(fh)
    known = {f.name for f in fields(Config)}
    unknown = set(doc) - known
    if unknown:
        raise ValueError(f"unknown config keys: {sorted(unknown)}")
    return Config(**doc)


class UsageError(Exception):
    pass


class _OnceStdin:
    """Reads the underlying stream once so several ``-`` arguments see the same document."""

    def __init__(self, stream):
        self._stream = stream
        self._text: Optional[str] = None

    def read(self) -> str:
        if self._text is None:
            self._text = self._stream.read()
        return self._text


def _read(path: str, stdin) -> Hypergraph:
    if path == "-":
        text = stdin.read()
    else:
        try:
            with open(path) as fh:
                text = fh.read()
        except OSError as exc:
            raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return hypergraph.parse(text)


def _dumps(doc) -> str:
    return json.dumps(doc, separators=(",", ":"))


def _edge_list(edges) -> list:
    return [list(e) for e in edges]


def _parse_weights(text: str) -> dict[int, float]:
    weights = {}
    for item in text.split(","):
        item = item.strip()
        if not item:
            continue
        try:
            k, w = item.split(":")
            weights[int(k)] = float(w)
        except ValueError:
            raise UsageError(f"bad weight {item!r}; expected k:probability") from None
    return weights


def _build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--output", choices=["text", "json"], default=None)
    common.add_argument("--monomial-cap", type=int, default=None)

    parser = argparse.ArgumentParser(prog="hyperlinf", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    p = sub.add_parser("validate", parents=[common], help="parse and print the canonical form")
    p.add_argument("file")

    gen = sub.add_parser("gen", help="generate hypergraphs")
    gsub = gen.add_subparsers(dest="kind", required=True)
    p = gsub.add_parser("complete-uniform")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("-k", type=int, required=True)
    p = gsub.add_parser("random")
    p.add_argument("-n", type=int, required=True)
    p.add_argument("--weights", required=True, help="comma-separated k:probability pairs, e.g. 2:0.3,3:0.3")
    p.add_argument("--seed", type=int, default=None)
    p = gsub.add_parser("union")
    p.add_argument("first")
    p.add_argument("second")

    p = sub.add_parser("check", parents=[common], help="structural self-checks")
    p.add_argument("file")
    p.add_argument("--max-degree", type=int, default=None)
    p.add_argument("--trials", type=int, default=50)
    p.add_argument("--seed", type=int, default=None)
    p.add_argument("--dump", action="store_true", help="print d of every generator")

    for name in ("betti", "poincare"):
        p = sub.add_parser(name, parents=[common])
        p.add_argument("file")
        p.add_argument("--max-degree", type=int, default=None)

    p = sub.add_parser("sdr", parents=[common], help="system of distinct representatives")
    p.add_argument("file")

    p = sub.add_parser("symplectic", parents=[common])
    p.add_argument("file")
    p.add_argument("--emit-form", action="store_true")

    p = sub.add_parser("iso", parents=[common], help="isomorphism test")
    p.add_argument("first")
    p.add_argument("second")
    p.add_argument("--depth", type=int, default=3)
    p.add_argument("--fingerprint-only", action="store_true")
    p.add_argument("--vertex-cap", type=int, default=None)
    return parser


def _effective(config: Config, args) -> Config:
    updates = {}
    for attr, cfg in (("output", "output"), ("monomial_cap", "monomial_cap"), ("max_degree", "max_degree"),
                      ("seed", "seed"), ("vertex_cap", "iso_vertex_cap")):
        value = getattr(args, attr, None)
        if value is not None:
            updates[cfg] = value
    return replace(config, **updates)


def _cmd_validate(args, cfg, stdin, out):
    g = _read(args.file, stdin)
    if cfg.output == "json":
        out.write(hypergraph.serialize(g) + "\n")
    else:
        prof = g.profile()
        out.write(f"valid: {g.n_vertices} vertices, {g.n_edges} edges, sizes {dict(prof.counts_by_size)}\n")
    return 0


def _cmd_gen(args, cfg, stdin, out):
    if args.kind == "complete-uniform":
        g = hypergraph.complete_uniform(args.n, args.k)
    elif args.kind == "random":
        g = hypergraph.random_hypergraph(args.n, _parse_weights(args.weights), cfg.seed)
    else:
        g = hypergraph.disjoint_union(_read(args.first, stdin), _read(args.second, stdin))
    out.write(hypergraph.serialize(g) + "\n")
    return 0


def _betti_doc(g: Hypergraph, cfg: Config) -> dict:
    reduced = mcalg.koszul_reduce(g)
    cx = cohomology.CochainComplex(reduced, cfg.monomial_cap)
    values = [cx.betti(i) for i in range(cfg.max_degree + 1)]
    warnings = cohomology.closed_form_warnings(g, values)
    for i in range(cfg.max_degree + 1):
        dim = cx.dim(i)
        if dim > 0.8 * cfg.monomial_cap:
            warnings.append(f"degree {i} uses {dim} monomials, near the cap of {cfg.monomial_cap}")
    return {
        "betti": values,
        "max_degree": cfg.max_degree,
        "reduced_generators": reduced.n_generators,
        "warnings": warnings,
    }


def _cmd_betti(args, cfg, stdin, out):
    g = _read(args.file, stdin)
    doc = _betti_doc(g, cfg)
    if args.command == "poincare":
        doc["series"] = format_series(doc["betti"])
    if cfg.output == "json":
        out.write(_dumps(doc) + "\n")
    else:
        out.write(f"{'i':>4} {'b_i':>10}\n")
        for i, b in enumerate(doc["betti"]):
            out.write(f"{i:>4} {b:>10}\n")
        if args.command == "poincare":
            out.write(f"P_t = {doc['series']} + O(t^{cfg.max_degree + 1})\n")
        out.write(f"reduced generators: {doc['reduced_generators']}\n")
    return 0


def _sdr_doc(found) -> dict:
    if isinstance(found, symplectic.SDR):
        return {"sdr": [{"edge": list(e), "vertex": v} for e, v in found.assignment.items()]}
    return {"violator": {"edges": _edge_list(found.edges), "union_size": found.union_size}}


def _cmd_sdr(args, cfg, stdin, out):
    g = _read(args.file, stdin)
    found = symplectic.find_sdr(g)
    doc = _sdr_doc(found)
    if cfg.output == "json":
        out.write(_dumps(doc) + "\n")
    elif "sdr" in doc:
        for item in doc["sdr"]:
            out.write(f"{item['edge']} -> {item['vertex']}\n")
    else:
        v = doc["violator"]
        out.write(f"no SDR: {len(v['edges'])} edges {v['edges']} cover only {v['union_size']} vertices\n")
    return 0 if "sdr" in doc else 1


def _cmd_symplectic(args, cfg, stdin, out):
    g = _read(args.file, stdin)
    decision = symplectic.is_symplectic(g)
    doc: dict = {"symplectic": decision.symplectic, "reason": decision.reason,
                 "dimension": g.n_vertices + g.n_edges}
    if decision.violator is not None:
        doc.update(_sdr_doc(decision.violator))
    if decision.sdr is not None:
        doc.update(_sdr_doc(decision.sdr))
    if decision.form is not None and args.emit_form:
        form = decision.form
        check = symplectic.verify_symplectic(g, form)
        doc["form"] = {
            "element": form.dump(),
            "basis": [gen.label for gen in form.algebra.generators],
            "matrix": [list(t) for t in form.matrix.triples()],
            "determinant": check.determinant,
            "verified": check.ok,
        }
    if cfg.output == "json":
        out.write(_dumps(doc) + "\n")
    else:
        out.write("symplectic\n" if decision.symplectic else f"not symplectic: {decision.reason}\n")
        if "form" in doc:
            out.write(f"omega = {doc['form']['element']}\n")
            for r, c, v in doc["form"]["matrix"]:
                out.write(f"{r} {c} {v}\n")
    return 0 if decision.symplectic else 1


def _cmd_iso(args, cfg, stdin, out):
    g1, g2 = _read(args.first, stdin), _read(args.second, stdin)
    if args.fingerprint_only:
        f1 = isomorphism.fingerprint(g1, args.depth, cfg.monomial_cap)
        f2 = isomorphism.fingerprint(g2, args.depth, cfg.monomial_cap)
        doc = {"fingerprints_equal": f1 == f2, "fingerprints": [f1.to_dict(), f2.to_dict()]}
        code = 0 if f1 == f2 else 1
    else:
        phi = isomorphism.are_isomorphic(g1, g2, cfg.iso_vertex_cap)
        doc = {"isomorphic": phi is not None}
        if phi is not None:
            doc["bijection"] = {str(v): w for v, w in phi.items()}
        code = 0 if phi is not None else 1
    if cfg.output == "json":
        out.write(_dumps(doc) + "\n")
    elif args.fingerprint_only:
        out.write("fingerprints equal\n" if code == 0 else "fingerprints differ\n")
    elif code == 0:
        out.write("isomorphic: " + " ".join(f"{v}->{w}" for v, w in doc["bijection"].items()) + "\n")
    else:
        out.write("not isomorphic\n")
    return code


def run_checks(g: Hypergraph, max_degree: int, trials: int = 50, seed: int = 0) -> list[dict]:
    """Structural self-checks on ``L(G)`` and its Maurer-Cartan algebra."""
    report = []
    lalg = linfty.build_linfty(g)
    full = mcalg.maurer_cartan(lalg)
    reduced = mcalg.reduce_algebra(full)

    dsq = mcalg.check_d_squared(full, trials, seed)
    report.append({"check": "d_squared", "pass": dsq.holds,
                   "detail": None if dsq.holds else full.dump(dsq.witness)})
    dsq_red = mcalg.check_d_squared(reduced, trials, seed)
    report.append({"check": "d_squared_reduced", "pass": dsq_red.holds,
                   "detail": None if dsq_red.holds else reduced.dump(dsq_red.witness)})

    nil = linfty.check_2step(lalg)
    report.append({"check": "two_step_nilpotent", "pass": nil.holds,
                   "detail": None if nil.holds else repr(nil.witness)})

    try:
        dims = linfty.lower_central_filtration(lalg)
        expected = [lalg.dim, g.n_edges, 0] if g.n_edges else [lalg.dim, 0]
        ok = dims == expected
        report.append({"check": "lower_central_filtration", "pass": ok, "detail": dims})
    except AssertionError as exc:
        report.append({"check": "lower_central_filtration", "pass": False, "detail": str(exc)})

    comm = linfty.commutator_dims(lalg)
    report.append({"check": "commutator_dims", "pass": comm == (g.n_edges, g.n_vertices), "detail": list(comm)})

    if g.profile().count(1):
        counted = [len(mcalg.enumerate_basis(reduced, i)) for i in range(max_degree + 1)]
        predicted = mcalg.reduced_dim_series(g, max_degree)
        name = "reduced_dims_vs_series"
    else:
        counted = [len(mcalg.enumerate_basis(full, i)) for i in range(max_degree + 1)]
        predicted = mcalg.dim_series(g, max_degree)
        name = "dims_vs_series"
    report.append({"check": name, "pass": counted == predicted, "detail": counted})
    return report


def _cmd_check(args, cfg, stdin, out):
    g = _read(args.file, stdin)
    report = run_checks(g, cfg.max_degree, args.trials, cfg.seed)
    ok = all(item["pass"] for item in report)
    dump = None
    if args.dump:
        full = mcalg.mc_algebra(g)
        dump = [f"d({gen.label}) = {full.dump(full.differential(full.gen(gen.id)))}" for gen in full.generators]
    if cfg.output == "json":
        doc = {"pass": ok, "checks": report}
        if dump is not None:
            doc["dump"] = dump
        out.write(_dumps(doc) + "\n")
    else:
        for item in report:
            out.write(f"{'PASS' if item['pass'] else 'FAIL'} {item['check']} {item['detail'] if item['detail'] is not None else ''}".rstrip() + "\n")
        for line in dump or []:
            out.write(line + "\n")
    return 0 if ok else 1


COMMANDS = {
    "validate": _cmd_validate,
    "gen": _cmd_gen,
    "check": _cmd_check,
    "betti": _cmd_betti,
    "poincare": _cmd_betti,
    "sdr": _cmd_sdr,
    "symplectic": _cmd_symplectic,
    "iso": _cmd_iso,
}


def run(argv: Optional[Sequence[str]] = None, stdin=None, stdout=None, stderr=None, environ=None) -> int:
    stdin = _OnceStdin(stdin or sys.stdin)
    stdout = stdout or sys.stdout
    stderr = stderr or sys.stderr
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return 2 if exc.code else 0
    try:
        cfg = _effective(load_config(os.environ if environ is None else environ), args)
        return COMMANDS[args.command](args, cfg, stdin, stdout)
    except (HypergraphError, UsageError, ValueError, OSError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2
    except (cohomology.ResourceLimitError, isomorphism.SizeLimitError) as exc:
        stderr.write(f"error: {exc}\n")
        return 2


def main():
    sys.exit(run())


if __name__ == "__main__":
    main()
