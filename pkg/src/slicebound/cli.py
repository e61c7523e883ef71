"""Command-line front end.

Four commands: ``invariants`` computes the invariant report for a matrix
or a braid closure, ``reduce`` runs the certified block reduction,
``certify`` re-verifies a stored certificate against its matrix, and
``corpus`` batch-processes a JSON-lines file of named inputs with
expected values.

Exit codes: 0 success, 1 expectation/verification mismatch or invalid
input data, 2 internal invariant violation, 64 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys

from .bounds import report
from .braid import BraidError, canonical_seifert_matrix, parse_braid
from .reduction import (
    ReductionCertificate,
    ReductionError,
    certificate_problem,
    reduce_to_block_form,
)
from .seifert import SeifertMatrix, SeifertMatrixError, UnimodularTransform

EX_OK = 0
EX_MISMATCH = 1
EX_INVARIANT = 2
EX_USAGE = 64


class InputError(Exception):
    """Bad input data (files, words, matrices); maps to exit code 1."""


class _Parser(argparse.ArgumentParser):
    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EX_USAGE, f"{self.prog}: error: {message}\n")


def build_parser():
    parser = _Parser(
        prog="slicebound",
        description=(
            "Knot invariants, certified block reduction, and topological "
            "slice genus bounds from Seifert matrices and braid words."
        ),
    )
    sub = parser.add_subparsers(dest="command", metavar="command")
    sub.required = True

    p_inv = sub.add_parser(
        "invariants", help="compute the invariant report for one input"
    )
    p_inv.add_argument("--matrix", metavar="PATH", help="matrix JSON file")
    p_inv.add_argument("--braid", metavar="WORD", help="braid word")
    p_inv.add_argument(
        "--strands", type=int, metavar="N", help="strand count override"
    )
    p_inv.add_argument("--json", action="store_true", dest="as_json")

    p_red = sub.add_parser(
        "reduce", help="reduce a matrix to nested block form, with certificate"
    )
    p_red.add_argument(
        "--matrix", metavar="PATH", required=True, help="matrix JSON file"
    )
    p_red.add_argument(
        "--emit-transform",
        metavar="PATH",
        help="write the unimodular transform to this file",
    )
    p_red.add_argument("--json", action="store_true", dest="as_json")

    p_cert = sub.add_parser(
        "certify", help="re-verify a stored certificate against its matrix"
    )
    p_cert.add_argument("--matrix", metavar="PATH", required=True)
    p_cert.add_argument("--certificate", metavar="PATH", required=True)
    p_cert.add_argument("--json", action="store_true", dest="as_json")

    p_corp = sub.add_parser(
        "corpus", help="run a JSON-lines corpus with expected values"
    )
    p_corp.add_argument("path", metavar="PATH")
    p_corp.add_argument("--json", action="store_true", dest="as_json")

    return parser


def _load_json_file(path):
    try:
        with open(path, "r", encoding="utf-8") as handle:
            return json.load(handle)
    except OSError as exc:
        raise InputError(f"cannot read {path}: {exc.strerror}") from exc
    except json.JSONDecodeError as exc:
        raise InputError(f"{path} is not valid JSON: {exc}") from exc


def load_matrix(path):
    data = _load_json_file(path)
    if not isinstance(data, dict) or "rows" not in data:
        raise InputError(f'{path}: expected an object with a "rows" field')
    try:
        return SeifertMatrix.from_rows(data["rows"])
    except (SeifertMatrixError, TypeError, ValueError) as exc:
        raise InputError(f"{path}: {exc}") from exc


def _matrix_rows_lines(rows):
    return ["[" + ", ".join(str(x) for x in row) + "]" for row in rows]


def _surface_for_braid(word, strands):
    try:
        braid = parse_braid(word, strands)
        return canonical_seifert_matrix(braid)
    except BraidError as exc:
        raise InputError(str(exc)) from exc


def cmd_invariants(args, out):
    surface = None
    if (args.matrix is None) == (args.braid is None):
        raise UsageError("exactly one of --matrix and --braid is required")
    if args.braid is not None:
        surface = _surface_for_braid(args.braid, args.strands)
        matrix = surface.seifert_matrix
    else:
        matrix = load_matrix(args.matrix)
    rep = report(matrix)
    if args.as_json:
        payload = rep.to_json()
        if surface is not None:
            payload["surface"] = {
                "size": matrix.size,
                "genus": surface.genus,
                "crossings": surface.crossing_count,
                "strands": surface.strand_count,
            }
        print(json.dumps(payload, indent=2), file=out)
        return EX_OK
    gb = rep.genus_bounds
    print(f"alexander polynomial  {rep.alexander}", file=out)
    print(f"alexander degree      {rep.alexander_degree}", file=out)
    print(f"signature             {rep.signature}", file=out)
    print(
        f"g4top bounds          [{gb.signature_lower}, {gb.alexander_upper}]",
        file=out,
    )
    if gb.determined_g4top is not None:
        print(f"g4top                 {gb.determined_g4top}", file=out)
    else:
        print("g4top                 not determined by these bounds", file=out)
    print(f"seifert genus         {gb.seifert_genus}", file=out)
    if surface is not None:
        print(f"surface matrix size   {matrix.size}", file=out)
        print(f"surface crossings     {surface.crossing_count}", file=out)
        print(f"surface strands       {surface.strand_count}", file=out)
    return EX_OK


def cmd_reduce(args, out):
    matrix = load_matrix(args.matrix)
    cert = reduce_to_block_form(matrix)
    if args.emit_transform:
        with open(args.emit_transform, "w", encoding="utf-8") as handle:
            json.dump({"transform": cert.transform.rows}, handle)
            handle.write("\n")
    if args.as_json:
        print(json.dumps(cert.to_json(), indent=2), file=out)
        return EX_OK
    print(f"d                     {cert.d}", file=out)
    print("reduced matrix", file=out)
    for line in _matrix_rows_lines(cert.reduced.rows):
        print(f"  {line}", file=out)
    print(f"trivial subform       {cert.trivial_subform.size}x"
          f"{cert.trivial_subform.size}", file=out)
    for line in _matrix_rows_lines(cert.trivial_subform.rows):
        print(f"  {line}", file=out)
    print(f"subform alexander     {cert.trivial_subform.alexander()}",
          file=out)
    return EX_OK


def certificate_from_json(data):
    """Rebuild a certificate from its JSON form.

    Returns (certificate, None) or (None, problem) when the stored data
    cannot even be assembled (for example a non-unimodular transform).
    """
    for field in ("d", "transform", "reduced", "trivial_subform"):
        if field not in data:
            return None, f"certificate is missing field {field!r}"
    try:
        transform = UnimodularTransform(
            tuple(tuple(int(x) for x in row) for row in data["transform"])
        )
    except (SeifertMatrixError, TypeError, ValueError):
        return None, "transform not unimodular"
    try:
        reduced = SeifertMatrix.from_rows(data["reduced"])
        subform = SeifertMatrix.from_rows(data["trivial_subform"])
    except (SeifertMatrixError, TypeError, ValueError) as exc:
        return None, f"stored matrix invalid: {exc}"
    d = data["d"]
    if not isinstance(d, int) or d < 0:
        return None, "d is not a non-negative integer"
    n = reduced.size
    if 2 * d > n:
        return None, "d out of range"
    rows = reduced.rows
    cert = ReductionCertificate(
        d=d,
        transform=transform,
        reduced=reduced,
        core=tuple(tuple(row[: 2 * d]) for row in rows[: 2 * d]),
        trivial_subform=subform,
        pair_vectors=tuple(
            tuple(rows[n - 2 * i][: n - 2 * i])
            for i in range(1, n // 2 - d + 1)
        ),
    )
    return cert, None


def cmd_certify(args, out):
    matrix = load_matrix(args.matrix)
    data = _load_json_file(args.certificate)
    if not isinstance(data, dict):
        raise InputError(f"{args.certificate}: expected a JSON object")
    cert, problem = certificate_from_json(data)
    if problem is None:
        problem = certificate_problem(matrix, cert)
    verdict = {"verified": problem is None, "problem": problem}
    if args.as_json:
        print(json.dumps(verdict, indent=2), file=out)
    elif problem is None:
        print("certificate verified", file=out)
    else:
        print(f"certificate rejected: {problem}", file=out)
    return EX_OK if problem is None else EX_MISMATCH


def _corpus_entry_result(entry):
    if not isinstance(entry, dict):
        return {"name": "?", "ok": False, "error": "entry is not an object"}
    name = entry.get("name", "?")
    has_braid = "braid" in entry
    has_matrix = "matrix" in entry
    if has_braid == has_matrix:
        return {
            "name": name,
            "ok": False,
            "error": 'exactly one of "braid" and "matrix" is required',
        }
    try:
        if has_braid:
            surface = _surface_for_braid(entry["braid"], entry.get("strands"))
            matrix = surface.seifert_matrix
        else:
            matrix = SeifertMatrix.from_rows(entry["matrix"])
    except (InputError, SeifertMatrixError, TypeError, ValueError) as exc:
        return {"name": name, "ok": False, "error": str(exc)}
    rep = report(matrix)
    gb = rep.genus_bounds
    computed = {
        "signature": rep.signature,
        "alex_degree": rep.alexander_degree,
        "g4top": gb.determined_g4top,
        "seifert_genus": gb.seifert_genus,
    }
    mismatches = []
    expect = entry.get("expect", {})
    if not isinstance(expect, dict):
        return {"name": name, "ok": False, "error": '"expect" must be a map'}
    for key, wanted in expect.items():
        if key not in computed:
            mismatches.append(f"unknown expectation {key!r}")
        elif computed[key] != wanted:
            mismatches.append(f"{key}: computed {computed[key]}, expected {wanted}")
    result = {"name": name, "ok": not mismatches, "computed": computed}
    if mismatches:
        result["error"] = "; ".join(mismatches)
    return result


def cmd_corpus(args, out):
    try:
        with open(args.path, "r", encoding="utf-8") as handle:
            lines = handle.readlines()
    except OSError as exc:
        raise InputError(f"cannot read {args.path}: {exc.strerror}") from exc
    results = []
    for lineno, line in enumerate(lines, start=1):
        if not line.strip():
            continue
        try:
            entry = json.loads(line)
        except json.JSONDecodeError as exc:
            results.append(
                {"name": f"line {lineno}", "ok": False, "error": str(exc)}
            )
            continue
        results.append(_corpus_entry_result(entry))
    if not results:
        print(f"warning: {args.path} contains no entries", file=sys.stderr)
    failures = sum(1 for r in results if not r["ok"])
    if args.as_json:
        print(json.dumps({"results": results, "failures": failures},
                         indent=2), file=out)
    else:
        for r in results:
            status = "pass" if r["ok"] else "FAIL"
            comp = r.get("computed")
            detail = (
                f"sigma={comp['signature']} deg={comp['alex_degree']} "
                f"g4top={comp['g4top']}" if comp else ""
            )
            line = f"{status}  {r['name']:<16} {detail}"
            if not r["ok"]:
                line += f"  ({r.get('error', 'mismatch')})"
            print(line.rstrip(), file=out)
        print(f"{len(results)} entries, {failures} failures", file=out)
    return EX_OK if failures == 0 else EX_MISMATCH


class UsageError(Exception):
    pass


_COMMANDS = {
    "invariants": cmd_invariants,
    "reduce": cmd_reduce,
    "certify": cmd_certify,
    "corpus": cmd_corpus,
}


def main(argv=None):
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else EX_USAGE
    try:
        return _COMMANDS[args.command](args, sys.stdout)
    except UsageError as exc:
        print(f"slicebound: error: {exc}", file=sys.stderr)
        return EX_USAGE
    except InputError as exc:
        print(f"slicebound: {exc}", file=sys.stderr)
        return EX_MISMATCH
    except ReductionError as exc:
        print(f"slicebound: {exc}", file=sys.stderr)
        return EX_INVARIANT


if __name__ == "__main__":
    sys.exit(main())
