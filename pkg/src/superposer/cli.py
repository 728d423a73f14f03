"""Command line interface.

Commands:
  synth   emit the preparation circuit for N (JSON document or QASM)
  verify  simulate both levels for N and check uniformity
  scan    exhaustive per-N and per-n CNOT statistics as CSV
  encode  address a record file and emit its mapping plus circuit

Exit codes: 0 success, 1 validation error, 2 verification failure.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path
from typing import Iterable, Iterator

from . import analysis, document, encoding, lowering, qasm, simulator, synthesis
from .ir import entangler_count


class _UsageError(ValueError):
    pass


class _Parser(argparse.ArgumentParser):
    def error(self, message: str):
        self.print_usage(sys.stderr)
        raise _UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    parser = _Parser(
        prog="superposer",
        description="Uniform-superposition circuit synthesis and analysis.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    synth = sub.add_parser("synth", help="emit the preparation circuit for N")
    synth.add_argument("N", type=int, help="number of basis states to superpose")
    synth.add_argument("--lower", action="store_true", help="rewrite onto {h,x,z,ry,cx,cz}")
    synth.add_argument(
        "--format", choices=("doc", "qasm"), default="doc",
        help="output format (qasm requires --lower)",
    )
    synth.add_argument("-o", "--output", metavar="PATH", help="write here instead of stdout")

    verify = sub.add_parser("verify", help="simulate and check uniformity for N")
    verify.add_argument("N", type=int)
    verify.add_argument(
        "--tolerance", type=float, default=1e-10,
        help="max allowed amplitude deviation (default 1e-10)",
    )

    scan = sub.add_parser("scan", help="CNOT statistics for all widths up to n-max")
    scan.add_argument("--n-max", type=int, required=True, metavar="N_MAX",
                      help=f"largest register width, 2..{analysis.MAX_SCAN_N_MAX}")
    scan.add_argument("--csv", metavar="PATH", help="write the per-N rows here")
    scan.add_argument("--summary", metavar="PATH",
                      help="write the per-n summary here (default stdout)")

    encode = sub.add_parser("encode", help="address a newline-delimited record file")
    encode.add_argument("dataset", metavar="PATH")
    encode.add_argument("--seed", type=int, default=0, help="permutation seed (default 0)")
    encode.add_argument("--mapping-out", required=True, metavar="PATH")
    encode.add_argument("--circuit-out", required=True, metavar="PATH",
                        help="lowered circuit; .qasm suffix selects QASM output")
    return parser


def _write_text(text: str, path: str | None) -> None:
    if path is None:
        sys.stdout.write(text)
    else:
        Path(path).write_text(text)


def cmd_synth(args: argparse.Namespace) -> int:
    circuit = synthesis.synthesize(args.N)
    if args.lower:
        circuit, _ = lowering.lower(circuit)
    if args.format == "qasm":
        if not args.lower:
            raise ValueError("qasm output requires --lower")
        text = qasm.emit_qasm(circuit)
    else:
        text = document.emit_document(circuit)
    _write_text(text, args.output)
    return 0


def cmd_verify(args: argparse.Namespace) -> int:
    pl = synthesis.plan(args.N)
    if pl.n > simulator.QUBIT_CAP:
        raise ValueError(
            f"N={args.N} needs {pl.n} qubits, above the {simulator.QUBIT_CAP}-qubit cap"
        )
    abstract = synthesis.synthesize(args.N)
    lowered, _ = lowering.lower(abstract)
    abstract_distance = simulator.uniform_distance(simulator.run(abstract), args.N)
    lowered_distance = simulator.uniform_distance(simulator.run(lowered), args.N)
    print(f"N={args.N} n={pl.n} entanglers={entangler_count(lowered)}")
    print(f"abstract max deviation: {abstract_distance:.3e}")
    print(f"lowered max deviation:  {lowered_distance:.3e}")
    passed = abstract_distance <= args.tolerance and lowered_distance <= args.tolerance
    print(f"{'PASS' if passed else 'FAIL'} (tolerance {args.tolerance:g})")
    return 0 if passed else 2


def _tee_rows(rows: Iterable[analysis.ScanRow], path: str) -> Iterator[analysis.ScanRow]:
    with open(path, "w", newline="") as handle:
        writer = csv.writer(handle)
        writer.writerow(analysis.SCAN_FIELDS)
        for row in rows:
            writer.writerow((row.N, row.n, row.xi, row.M, row.g, row.m, row.cnot, row.case.value))
            yield row


def cmd_scan(args: argparse.Namespace) -> int:
    rows: Iterable[analysis.ScanRow] = analysis.scan_rows(args.n_max)
    if args.csv:
        rows = _tee_rows(rows, args.csv)
    stats = analysis.summarize(rows)
    lines = [",".join(analysis.SUMMARY_FIELDS)]
    lines += [f"{s.n},{s.max_count},{s.mean_count}" for s in stats.per_n]
    _write_text("\n".join(lines) + "\n", args.summary)
    return 0


def cmd_encode(args: argparse.Namespace) -> int:
    dataset = encoding.Dataset.from_path(args.dataset)
    mapping = encoding.build_mapping(dataset, args.seed)
    Path(args.mapping_out).write_bytes(encoding.serialize(mapping))
    lowered, _ = lowering.lower(synthesis.synthesize(dataset.size))
    if args.circuit_out.endswith(".qasm"):
        text = qasm.emit_qasm(lowered)
    else:
        text = document.emit_document(lowered)
    Path(args.circuit_out).write_text(text)
    print(f"N={dataset.size} n={mapping.n} cnots={entangler_count(lowered)}")
    return 0


_COMMANDS = {
    "synth": cmd_synth,
    "verify": cmd_verify,
    "scan": cmd_scan,
    "encode": cmd_encode,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
        return _COMMANDS[args.command](args)
    except _UsageError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
