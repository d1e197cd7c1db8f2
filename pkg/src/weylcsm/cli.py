"""``weylcsm`` command line.

Exit status: 0 on success, 1 when a verification suite fails, 2 for usage,
parse and cache errors.
"""

from __future__ import annotations

import argparse
import hashlib
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from pathlib import Path
from typing import Iterator, Sequence

from .cartan import CartanDatum, CartanError
from .constants import BASES, ConstantError, StructureConstant, compute_record, euler_characteristic
from .io import names_with_hbar, ratfunc_latex, ratfunc_text
from .symfunc import Poly, RatFunc
from .verify import SUITES, TYPES_BY_RANK, Check, run_suite
from .weyl import WeylElement, WeylError, WeylGroup, format_word

CACHE_ENV = "WEYLCSM_CACHE"


class UsageError(Exception):
    pass


class CacheError(Exception):
    pass


# -- helpers --------------------------------------------------------------------


def _datum(args: argparse.Namespace) -> CartanDatum:
    if getattr(args, "cartan", None):
        try:
            return CartanDatum.from_file(args.cartan)
        except (OSError, json.JSONDecodeError) as exc:
            raise UsageError(f"cannot read Cartan matrix {args.cartan}: {exc}") from exc
    if not getattr(args, "type", None):
        raise UsageError("one of --type or --cartan is required")
    return CartanDatum.from_type(args.type)


def _parabolic(text: str | None, rank: int) -> tuple[int, ...]:
    if not text:
        return ()
    out = []
    for k, part in enumerate(text.replace(" ", "").split(",")):
        if not part.isdigit():
            raise UsageError(f"--parabolic: entry {k + 1} ({part!r}) is not an index")
        i = int(part)
        if not 1 <= i <= rank:
            raise UsageError(f"--parabolic: index {i} out of range 1..{rank}")
        out.append(i)
    return tuple(sorted(set(out)))


def _element(group: WeylGroup, name: str, text: str | None) -> WeylElement:
    if text is None:
        raise UsageError(f"--{name} is required")
    try:
        return group.parse(text)
    except WeylError as exc:
        raise UsageError(f"--{name}: {exc}") from exc


def _format_value(value: RatFunc | Poly, fmt: str, rank: int) -> str:
    if isinstance(value, Poly):
        f = value.to_ratfunc()
        names = names_with_hbar(rank, latex=fmt == "latex")
    else:
        f, names = value, None
    return ratfunc_latex(f, names) if fmt == "latex" else ratfunc_text(f, names)


def _dumps(obj: object) -> str:
    return json.dumps(obj, sort_keys=True, separators=(",", ":"))


def _emit(text: str, out: str | None) -> None:
    if out:
        try:
            Path(out).write_text(text + "\n")
        except OSError as exc:
            raise UsageError(f"cannot write {out}: {exc}") from exc
    else:
        print(text)


def _render_record(rec: StructureConstant, fmt: str, rank: int) -> str:
    if fmt == "json":
        return _dumps(rec.to_json())
    return _format_value(rec.value, fmt, rank)


# -- cache ----------------------------------------------------------------------


class RecordCache:
    """Content-addressed store of result records with a checksum per entry."""

    def __init__(self, root: Path) -> None:
        self.root = root

    @staticmethod
    def key(datum: CartanDatum, basis: str, parabolic: Sequence[int], u: str, v: str, w: str) -> str:
        blob = _dumps({"cartan": datum.digest(), "basis": basis, "parabolic": list(parabolic), "uvw": [u, v, w]})
        return hashlib.sha256(blob.encode()).hexdigest()

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, key: str) -> dict | None:
        path = self._path(key)
        if not path.exists():
            return None
        try:
            entry = json.loads(path.read_text())
            record = entry["record"]
            ok = entry["checksum"] == hashlib.sha256(_dumps(record).encode()).hexdigest()
        except (OSError, ValueError, KeyError, TypeError):
            ok = False
        if not ok:
            raise CacheError(f"corrupt cache entry {path}")
        return record

    def put(self, key: str, record: dict) -> None:
        path = self._path(key)
        path.parent.mkdir(parents=True, exist_ok=True)
        body = _dumps({"checksum": hashlib.sha256(_dumps(record).encode()).hexdigest(), "record": record})
        tmp = path.with_suffix(f".tmp{os.getpid()}")
        tmp.write_text(body)
        os.replace(tmp, path)


# -- table workers ----------------------------------------------------------------

_worker_group: WeylGroup | None = None


def _init_worker(cartan: tuple, name: str | None) -> None:
    global _worker_group
    _worker_group = WeylGroup(CartanDatum(cartan, name=name))


def _work(job: tuple[str, tuple[int, ...], str, str, str]) -> dict:
    assert _worker_group is not None
    basis, par, u, v, w = job
    g = _worker_group
    return compute_record(g, basis, g.parse(u), g.parse(v), g.parse(w), par).to_json()


def _table_jobs(group: WeylGroup, basis: str, par: tuple[int, ...], max_length: int | None) -> Iterator[tuple]:
    pts = group.minimal_representatives(par) if par else group.elements
    words = {x: format_word(group.word(x)) for x in pts}
    for u in pts:
        for v in pts:
            for w in pts:
                if max_length is not None and w.length > max_length:
                    continue
                yield (basis, par, words[u], words[v], words[w])


# -- subcommands ----------------------------------------------------------------


def cmd_constant(args: argparse.Namespace) -> int:
    datum = _datum(args)
    group = WeylGroup(datum)
    par = _parabolic(args.parabolic, datum.rank)
    u, v, w = (_element(group, k, getattr(args, k)) for k in ("u", "v", "w"))
    _require_minimal(group, par, u=u, v=v, w=w)
    rec = compute_record(group, args.basis, u, v, w, par)
    _emit(_render_record(rec, args.format, datum.rank), args.out)
    return 0


def cmd_parabolic(args: argparse.Namespace) -> int:
    if not args.parabolic:
        raise UsageError("--parabolic is required")
    args.basis = "ssm"
    return cmd_constant(args)


def cmd_euler(args: argparse.Namespace) -> int:
    datum = _datum(args)
    group = WeylGroup(datum)
    u, v, w = (_element(group, k, getattr(args, k)) for k in ("u", "v", "w"))
    value = euler_characteristic(group, u, v, w)
    if args.format == "json":
        text = _dumps({"type": datum.name, "u": args.u, "v": args.v, "w": args.w, "euler_limit": value})
    else:
        text = str(value)
    _emit(text, args.out)
    return 0


def cmd_table(args: argparse.Namespace) -> int:
    datum = _datum(args)
    group = WeylGroup(datum)
    par = _parabolic(args.parabolic, datum.rank)
    if par and args.basis != "ssm":
        raise UsageError("parabolic tables are only defined for --basis ssm")
    if not args.out:
        raise UsageError("table needs --out")
    cache_dir = args.cache_dir or os.environ.get(CACHE_ENV)
    cache = RecordCache(Path(cache_dir)) if cache_dir else None
    jobs = list(_table_jobs(group, args.basis, par, args.max_length))
    records: list[dict | None] = [None] * len(jobs)
    keys = [RecordCache.key(datum, args.basis, par, *job[2:]) for job in jobs]
    todo = []
    for k, key in enumerate(keys):
        hit = cache.get(key) if cache else None
        if hit is None:
            todo.append(k)
        else:
            records[k] = hit
    if args.jobs > 1 and len(todo) > 1:
        with ProcessPoolExecutor(
            max_workers=args.jobs, initializer=_init_worker, initargs=(datum.cartan, datum.name)
        ) as pool:
            results = list(pool.map(_work, [jobs[k] for k in todo], chunksize=max(1, len(todo) // (8 * args.jobs))))
    else:
        _init_worker(datum.cartan, datum.name)
        results = [_work(jobs[k]) for k in todo]
    for k, rec in zip(todo, results):
        records[k] = rec
        if cache:
            cache.put(keys[k], rec)
    try:
        with open(args.out, "w") as fh:
            for rec in records:
                fh.write(_dumps(rec) + "\n")
    except OSError as exc:
        raise UsageError(f"cannot write {args.out}: {exc}") from exc
    print(f"wrote {len(records)} records to {args.out} ({len(records) - len(todo)} from cache)", file=sys.stderr)
    return 0


def _run_suite_job(job: tuple) -> list[Check]:
    return run_suite(*job)


def cmd_verify(args: argparse.Namespace) -> int:
    types: list | None
    if args.cartan:
        types = [_datum(args)]
    elif args.type:
        types = [CartanDatum.from_type(args.type)]
    elif args.rank is not None:
        if args.rank not in TYPES_BY_RANK:
            raise UsageError(f"--rank must be one of {sorted(TYPES_BY_RANK)}")
        types = list(TYPES_BY_RANK[args.rank])
    else:
        types = None
    max_len = 4 if args.max_length is None else args.max_length
    suites = SUITES[:-1] if args.suite == "all" else (args.suite,)
    jobs = [(s, types, args.seed, max_len, args.samples) for s in suites]
    if args.jobs > 1 and len(jobs) > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_run_suite_job, jobs))
    else:
        results = [_run_suite_job(j) for j in jobs]
    checks = [c for batch in results for c in batch]
    lines = [c.line() for c in checks]
    failed = sum(not c.passed for c in checks)
    total = sum(c.count for c in checks)
    lines.append(f"{'FAIL' if failed else 'PASS'}: {len(checks) - failed}/{len(checks)} identities, {total} instances")
    _emit("\n".join(lines), args.out)
    return 1 if failed else 0


def _require_minimal(group: WeylGroup, par: Sequence[int], **elems: WeylElement) -> None:
    if not par:
        return
    reps = set(group.minimal_representatives(par))
    for name, x in elems.items():
        if x not in reps:
            word = format_word(group.word(x)) or "id"
            raise UsageError(f"--{name} {word} is not a minimal coset representative for --parabolic {','.join(map(str, par))}")


# -- parser ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylcsm", description="Structure constants of SSM/CSM/stable classes on G/B and G/P.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p: argparse.ArgumentParser, fmt_default: str = "latex") -> None:
        p.add_argument("--type", help="root system type, e.g. A2, B3, G2")
        p.add_argument("--cartan", metavar="PATH", help="JSON file holding a Cartan matrix")
        p.add_argument("--format", choices=("text", "latex", "json"), default=fmt_default)
        p.add_argument("--out", metavar="PATH")

    def elements(p: argparse.ArgumentParser) -> None:
        for k in ("u", "v", "w"):
            p.add_argument(f"--{k}", metavar="WORD", help='reduced or non-reduced word, e.g. "1,2,1" or "121"; "" is id')

    p = sub.add_parser("constant", help="one structure constant")
    common(p)
    elements(p)
    p.add_argument("--basis", choices=BASES, default="ssm")
    p.add_argument("--parabolic", metavar="I,J")
    p.set_defaults(func=cmd_constant)

    p = sub.add_parser("parabolic", help="one G/P structure constant")
    common(p)
    elements(p)
    p.add_argument("--parabolic", metavar="I,J")
    p.set_defaults(func=cmd_parabolic)

    p = sub.add_parser("euler", help="non-equivariant (Euler characteristic) limit of an SSM constant")
    common(p, fmt_default="text")
    elements(p)
    p.set_defaults(func=cmd_euler)

    p = sub.add_parser("table", help="tabulate constants into a JSON-lines file")
    common(p, fmt_default="json")
    p.add_argument("--basis", choices=BASES, default="ssm")
    p.add_argument("--parabolic", metavar="I,J")
    p.add_argument("--max-length", "--max-len", dest="max_length", type=int, metavar="N")
    p.add_argument("--jobs", type=int, default=1)
    p.add_argument("--cache-dir", metavar="PATH", help=f"defaults to ${CACHE_ENV}")
    p.set_defaults(func=cmd_table)

    p = sub.add_parser("verify", help="run an identity suite")
    common(p, fmt_default="text")
    p.add_argument("--suite", choices=SUITES, default="all")
    p.add_argument("--rank", type=int)
    p.add_argument("--max-length", "--max-len", dest="max_length", type=int, metavar="N")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--samples", type=int, default=100)
    p.add_argument("--jobs", type=int, default=1)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv: Sequence[str] | None = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)
    try:
        return args.func(args)
    except (UsageError, CartanError, WeylError, CacheError) as exc:
        print(f"weylcsm: error: {exc}", file=sys.stderr)
        return 2
    except ConstantError as exc:
        print(f"weylcsm: check failed: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
