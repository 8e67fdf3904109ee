"""Spectrum and complex files, fixture lookup, and DOT output.

Both file kinds are small JSON objects written one key per line with inline
lists, so that saved files diff cleanly and round-trip byte for byte.
"""
from __future__ import annotations

import json
import os
import warnings
from dataclasses import dataclass
from pathlib import Path
from typing import Iterable

from .complexes import PrimeComplex, PrimeGraph, reduce_to_antichain
from .errors import InvariantViolation, MissingFixture, ParseError
from .numtheory import is_prime

PACKAGE_FIXTURES = Path(__file__).resolve().parent / "fixtures"


class AntichainReduced(UserWarning):
    """A complex file listed faces that are not maximal; they were dropped."""


def divisor_closure(orders: Iterable[int]) -> tuple[int, ...]:
    out: set[int] = set()
    for m in set(orders):
        d = 1
        while d * d <= m:
            if m % d == 0:
                out.update((d, m // d))
            d += 1
    return tuple(sorted(out))


@dataclass(frozen=True)
class SpectrumFile:
    name: str
    orders: tuple[int, ...]
    source: str = ""


def _dump(obj: dict) -> str:
    body = ",\n".join(f"  {json.dumps(k)}: {json.dumps(v, ensure_ascii=False)}" for k, v in obj.items())
    return "{\n" + body + "\n}\n"


def read_json_object(path: Path) -> dict:
    try:
        text = Path(path).read_text(encoding="utf-8")
    except OSError as exc:
        raise ParseError(f"{path}: cannot read ({exc.strerror})") from exc
    try:
        data = json.loads(text)
    except json.JSONDecodeError as exc:
        raise ParseError(f"{path}:{exc.lineno}:{exc.colno}: {exc.msg}") from exc
    if not isinstance(data, dict):
        raise ParseError(f"{path}: expected a JSON object at top level")
    return data


def _int_list(path, field: str, value) -> list[int]:
    if not isinstance(value, list):
        raise ParseError(f"{path}: field {field!r} must be a list")
    for i, x in enumerate(value):
        if isinstance(x, bool) or not isinstance(x, int) or x < 1:
            raise ParseError(f"{path}: field {field!r}[{i}] = {x!r} is not a positive integer")
    return value


def parse_spectrum(data: dict, path="<data>") -> SpectrumFile:
    for key in ("name", "orders"):
        if key not in data:
            raise ParseError(f"{path}: missing field {key!r}")
    if not isinstance(data["name"], str):
        raise ParseError(f"{path}: field 'name' must be a string")
    orders = _int_list(path, "orders", data["orders"])
    if not orders:
        raise ParseError(f"{path}: field 'orders' is empty")
    source = data.get("source", "")
    if not isinstance(source, str):
        raise ParseError(f"{path}: field 'source' must be a string")
    return SpectrumFile(data["name"], divisor_closure(orders), source)


def load_spectrum(path) -> SpectrumFile:
    """Read a spectrum file; orders come back divisor-closed and sorted."""
    return parse_spectrum(read_json_object(path), path)


def spectrum_to_json(s: SpectrumFile) -> str:
    return _dump({"name": s.name, "orders": list(divisor_closure(s.orders)), "source": s.source})


def save_spectrum(path, s: SpectrumFile) -> None:
    Path(path).write_text(spectrum_to_json(s), encoding="utf-8")


def load_complex(path) -> PrimeComplex:
    data = read_json_object(path)
    for key in ("vertices", "maximal"):
        if key not in data:
            raise ParseError(f"{path}: missing field {key!r}")
    vertices = _int_list(path, "vertices", data["vertices"])
    if not isinstance(data["maximal"], list):
        raise ParseError(f"{path}: field 'maximal' must be a list")
    maximal = [_int_list(path, f"maximal[{i}]", f) for i, f in enumerate(data["maximal"])]
    bad = sorted({p for f in maximal for p in f} | set(vertices))
    bad = [p for p in bad if not is_prime(p)]
    if bad:
        raise InvariantViolation(f"{path}: non-prime vertices {bad}")
    if any(len(set(f)) != len(f) for f in maximal):
        raise InvariantViolation(f"{path}: a maximal face repeats a prime")
    reduced = reduce_to_antichain(maximal)
    if len(reduced) != len(maximal) or any(tuple(sorted(f)) not in reduced for f in maximal):
        warnings.warn(f"{path}: non-maximal faces dropped", AntichainReduced, stacklevel=2)
    return PrimeComplex(tuple(sorted(set(vertices))), reduced)


def complex_to_json(c: PrimeComplex) -> str:
    return _dump({"vertices": list(c.vertices), "maximal": [list(s) for s in c.maximal]})


def save_complex(path, c: PrimeComplex) -> None:
    Path(path).write_text(complex_to_json(c), encoding="utf-8")


def complex_to_text(c: PrimeComplex) -> str:
    def brace(s):
        return "{" + ",".join(str(p) for p in s) + "}"

    return f"vertices {brace(c.vertices)}\nmaximal {','.join(brace(s) for s in c.maximal)}\n"


def emit_dot(g: PrimeGraph, name: str = "prime_graph") -> str:
    """Undirected DOT, vertices ascending and edges in lexicographic order."""
    lines = [f"graph {json.dumps(name)} {{"]
    lines += [f"  {v};" for v in sorted(g.vertices)]
    lines += [f"  {p} -- {r};" for p, r in sorted(tuple(sorted(e)) for e in g.edges)]
    return "\n".join(lines) + "\n}\n"


# -- fixtures ---------------------------------------------------------------

def fixtures_dir(directory=None) -> Path:
    if directory is not None:
        return Path(directory)
    env = os.environ.get("PSC_FIXTURES")
    return Path(env) if env else PACKAGE_FIXTURES


def list_fixtures(directory=None) -> list[SpectrumFile]:
    d = fixtures_dir(directory)
    if not d.is_dir():
        raise MissingFixture(f"fixture directory {d} does not exist")
    return sorted((load_spectrum(p) for p in d.glob("*.json")), key=lambda s: s.name)


def load_fixture(name: str, directory=None) -> SpectrumFile:
    """Fixture by file stem or by its ``name`` field."""
    d = fixtures_dir(directory)
    direct = d / f"{name}.json"
    if direct.is_file():
        return load_spectrum(direct)
    if d.is_dir():
        for p in sorted(d.glob("*.json")):
            s = load_spectrum(p)
            if s.name == name:
                return s
    raise MissingFixture(f"no fixture named {name!r} in {d}")
