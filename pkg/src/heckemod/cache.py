"""Persistent store for exact Hecke characteristic polynomials.

Layout: one JSON-lines file per prime p (``p<p>.jsonl``) inside the
cache directory, one record per line with sorted keys and LF
terminators::

    {"coeffs": ["-20468736", "-1080", "1"], "k": 24, "p": 2}

Coefficients are canonical decimal strings, ascending by degree, so
records survive any JSON number-precision concerns and recomputation
reproduces them byte for byte.  A cache constructed with directory
None memoizes in memory only.
"""

from __future__ import annotations

import json
import os

from .hecke import IntPoly, charpoly


class CharpolyCache:
    def __init__(self, directory=None):
        self.directory = directory
        self._mem = {}
        self._loaded = set()
        if directory is not None:
            os.makedirs(directory, exist_ok=True)

    def _path(self, p: int) -> str:
        return os.path.join(self.directory, "p%d.jsonl" % p)

    def _load(self, p: int):
        if p in self._loaded or self.directory is None:
            return
        self._loaded.add(p)
        path = self._path(p)
        if not os.path.exists(path):
            return
        with open(path, "r", encoding="ascii") as fh:
            for line in fh:
                if not line.strip():
                    continue
                rec = json.loads(line)
                key = (rec["p"], rec["k"])
                self._mem[key] = IntPoly(tuple(int(c) for c in rec["coeffs"]))

    def get(self, p: int, k: int):
        self._load(p)
        return self._mem.get((p, k))

    def put(self, p: int, k: int, poly: IntPoly):
        self._load(p)
        if (p, k) in self._mem:
            return
        self._mem[(p, k)] = poly
        if self.directory is not None:
            with open(self._path(p), "a", encoding="ascii", newline="") as fh:
                fh.write(record_line(p, k, poly))

    def charpoly(self, p: int, k: int) -> IntPoly:
        """Cached characteristic polynomial of T_p at weight k."""
        found = self.get(p, k)
        if found is None:
            found = charpoly(p, k)
            self.put(p, k, found)
        return found


def record_line(p: int, k: int, poly: IntPoly) -> str:
    rec = {"coeffs": [str(c) for c in poly.coeffs], "k": k, "p": p}
    return json.dumps(rec, sort_keys=True) + "\n"


def cached_charpoly(p: int, k: int, cache=None) -> IntPoly:
    """charpoly through an optional CharpolyCache."""
    if cache is None:
        return charpoly(p, k)
    return cache.charpoly(p, k)
