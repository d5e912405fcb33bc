"""Corpus files, batch runs, the result cache and the Steinberg-zero search.

Corpus format, one entry per line (``#`` starts a comment)::

    name | builder-spec | p1,p2 | tag1 tag2

Reports are assembled in corpus order and serialized with sorted keys, so two
runs with the same corpus, seed and version give byte-identical output.
"""

from __future__ import annotations

import hashlib
import json
import logging
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from . import __version__
from .builders import build
from .errors import BuildError, CapabilityError, IncompleteError, MalformedInputError, ModSimpleError
from .gflinalg.field import is_prime
from .pcomplex import steinberg_nonzero
from .permgrp.structure import core_p_idx
from .permgrp.subgroups import DEFAULT_LATTICE_BOUND
from .theorem1.report import FAIL, PASS, UNVERIFIED, verify_theorem1

SCHEMA_VERSION = 1
WORKERS_ENV = "MODSIMPLE_WORKERS"
CACHE_ENV = "MODSIMPLE_CACHE_DIR"

log = logging.getLogger(__name__)


@dataclass(frozen=True)
class CorpusEntry:
    name: str
    builder: str
    primes: tuple[int, ...]
    tags: tuple[str, ...] = field(default=())


def parse_corpus(text: str) -> list[CorpusEntry]:
    entries = []
    names = set()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = [s.strip() for s in line.split("|")]
        if len(parts) not in (3, 4):
            raise MalformedInputError(f"line {lineno}: expected 'name | builder | primes | tags'")
        name, builder, primes = parts[:3]
        tags = tuple(parts[3].replace(",", " ").split()) if len(parts) == 4 else ()
        if not name or not builder:
            raise MalformedInputError(f"line {lineno}: empty name or builder")
        if name in names:
            raise MalformedInputError(f"line {lineno}: duplicate entry name {name!r}")
        try:
            ps = tuple(int(x) for x in primes.split(",") if x.strip())
        except ValueError:
            raise MalformedInputError(f"line {lineno}: bad prime list {primes!r}") from None
        if not ps or not all(is_prime(x) for x in ps):
            raise MalformedInputError(f"line {lineno}: primes must be a nonempty list of primes")
        names.add(name)
        entries.append(CorpusEntry(name, builder, ps, tags))
    return entries


def load_corpus(path) -> list[CorpusEntry]:
    return parse_corpus(Path(path).read_text())


def bundled_corpus_path() -> Path:
    return Path(__file__).parent / "data" / "paper.corpus"


def toolchain() -> dict:
    import scipy

    return {"modsimple": __version__, "numpy": np.__version__, "scipy": scipy.__version__,
            "python": f"{sys.version_info.major}.{sys.version_info.minor}"}


# -- cache ---------------------------------------------------------------------------------


def default_cache_dir() -> Path:
    env = os.environ.get(CACHE_ENV)
    if env:
        return Path(env)
    return Path(os.environ.get("XDG_CACHE_HOME", Path.home() / ".cache")) / "modsimple"


def cache_key(builder: str, p: int, seed: int, bound: int = DEFAULT_LATTICE_BOUND) -> str:
    blob = json.dumps({"builder": builder, "p": p, "seed": seed, "bound": bound, "toolchain": toolchain()},
                      sort_keys=True)
    return hashlib.sha256(blob.encode()).hexdigest()


class ResultCache:
    """Content-addressed store of per-(builder, prime) report dicts."""

    def __init__(self, root: Path | None = None):
        self.root = Path(root) if root is not None else default_cache_dir()

    def _path(self, key: str) -> Path:
        return self.root / key[:2] / f"{key}.json"

    def get(self, key: str):
        try:
            return json.loads(self._path(key).read_text())
        except (OSError, ValueError):
            return None

    def put(self, key: str, value: dict):
        path = self._path(key)
        try:
            path.parent.mkdir(parents=True, exist_ok=True)
            tmp = path.with_suffix(".tmp")
            tmp.write_text(json.dumps(value, sort_keys=True))
            tmp.replace(path)
        except OSError as exc:  # a read-only cache is not fatal
            log.warning("cache write failed: %s", exc)


# -- runs ----------------------------------------------------------------------------------


def analyze_entry(builder: str, p: int, seed: int = 0, base_dir: str | None = None,
                  bound: int = DEFAULT_LATTICE_BOUND) -> dict:
    """Report dict for one (builder, prime) pair; errors are recorded, not raised."""
    try:
        G = build(builder, Path(base_dir) if base_dir else None)
    except (BuildError, MalformedInputError) as exc:
        return {"builder": builder, "p": p, "error": {"kind": "build", "message": str(exc)},
                "outcome": UNVERIFIED}
    try:
        rep = verify_theorem1(G, p, seed=seed, bound=bound).to_dict()
    except (CapabilityError, IncompleteError) as exc:
        return {"builder": builder, "p": p, "error": {"kind": "capability", "message": str(exc)},
                "outcome": UNVERIFIED}
    rep["builder"] = builder
    return rep


def _job(args):
    return analyze_entry(*args)


def worker_count() -> int:
    try:
        return max(1, int(os.environ.get(WORKERS_ENV, "1")))
    except ValueError:
        return 1


def run(entries, seed: int = 0, use_cache: bool = True, cache: ResultCache | None = None,
        workers: int | None = None, base_dir=None, bound: int = DEFAULT_LATTICE_BOUND) -> dict:
    """Analyze every entry at every listed prime and assemble the report file."""
    cache = cache if cache is not None else (ResultCache() if use_cache else None)
    jobs = []
    for e in entries:
        for p in e.primes:
            jobs.append((e, p))
    results: list[dict | None] = [None] * len(jobs)
    todo = []
    for i, (e, p) in enumerate(jobs):
        hit = cache.get(cache_key(e.builder, p, seed, bound)) if cache is not None else None
        if hit is not None:
            results[i] = hit
        else:
            todo.append(i)
    args = [(jobs[i][0].builder, jobs[i][1], seed, str(base_dir) if base_dir else None, bound)
            for i in todo]
    workers = worker_count() if workers is None else workers
    if workers > 1 and len(args) > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            computed = list(pool.map(_job, args))
    else:
        computed = [_job(a) for a in args]
    for i, rep in zip(todo, computed):
        results[i] = rep
        if cache is not None and "error" not in rep:
            e, p = jobs[i]
            cache.put(cache_key(e.builder, p, seed, bound), rep)
    reports = []
    for (e, p), rep in zip(jobs, results):
        reports.append({"entry": e.name, "tags": list(e.tags), **rep})
    outcomes = [r["outcome"] for r in reports]
    return {
        "schema_version": SCHEMA_VERSION,
        "toolchain": toolchain(),
        "seed": seed,
        "lattice_bound": bound,
        "reports": reports,
        "summary": {k: outcomes.count(k) for k in (PASS, FAIL, UNVERIFIED)},
    }


def exit_code(report_file: dict) -> int:
    """0 when everything passes, 1 on any failed claim, 2 when only unverified remain."""
    s = report_file["summary"]
    if s.get(FAIL):
        return 1
    if s.get(UNVERIFIED):
        return 2
    return 0


def dumps(obj) -> str:
    return json.dumps(obj, sort_keys=True, indent=2) + "\n"


def search_steinberg_zero(entries, p: int, base_dir=None, bound: int = DEFAULT_LATTICE_BOUND) -> dict:
    """Groups with O_p(G) = 1 whose Steinberg character vanishes identically."""
    if not is_prime(p):
        raise MalformedInputError(f"{p} is not prime")
    hits, excluded, skipped = [], [], []
    for e in entries:
        try:
            G = build(e.builder, Path(base_dir) if base_dir else None)
            if core_p_idx(G, p).size > 1:
                excluded.append(e.name)
                continue
            nonzero = steinberg_nonzero(G, p, bound)
        except (ModSimpleError, ValueError, RuntimeError) as exc:
            log.warning("skipping %s: %s", e.name, exc)
            skipped.append({"entry": e.name, "reason": str(exc)})
            continue
        if not nonzero:
            hits.append(e.name)
    return {"p": p, "hits": hits, "excluded": excluded, "skipped": skipped}
