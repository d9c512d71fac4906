"""Quantum-module data: built-in A_k and file-loaded D/E modules.

The D and E adjacency matrices ship as line-oriented data files under
``hyperlat/data`` (override with the ``HYPERLAT_DATA_DIR`` environment
variable).  File contents are not trusted: loading runs the grading check
and the fusion/folding validation pipeline, and the verification suite
additionally certifies each file against the published lattice invariants.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from .folding import ExtendedFusion
from .fusion import FusionError, build_alcove_fusion, builtin_A_generator

DATA_DIR_ENV = "HYPERLAT_DATA_DIR"

#: supported (name, level) pairs for the bundled catalogue
BUNDLED = {
    ("D", 3): "D3.txt",
    ("D", 6): "D6.txt",
    ("E5", 5): "E5.txt",
    ("E9", 9): "E9.txt",
    ("E21", 21): "E21.txt",
}


class ModuleError(ValueError):
    """Unknown module request or invalid module datum."""


class ModuleParseError(ModuleError):
    """Malformed module file; message carries the offending line number."""


@dataclass(frozen=True)
class QuantumModule:
    """A level-k SU(3) quantum module: fundamental adjacency plus trialities."""

    name: str
    level: int
    rank: int
    adjacency: np.ndarray = field(repr=False)
    trialities: tuple[int, ...]

    @property
    def altitude(self) -> int:
        return self.level + 3

    def __post_init__(self):
        self.adjacency.setflags(write=False)


def _data_dir() -> Path:
    override = os.environ.get(DATA_DIR_ENV)
    if override:
        return Path(override)
    return Path(__file__).parent / "data"


def validate_module(mod: QuantumModule) -> None:
    """Run the module invariants; raises ModuleError naming the violation."""
    adj = mod.adjacency
    if adj.shape != (mod.rank, mod.rank):
        raise ModuleError(
            f"adjacency shape {adj.shape} does not match rank {mod.rank}"
        )
    if (adj < 0).any():
        raise ModuleError("adjacency has a negative entry")
    if len(mod.trialities) != mod.rank:
        raise ModuleError("triality sequence length does not match rank")
    if any(t not in (0, 1, 2) for t in mod.trialities):
        raise ModuleError("trialities must lie in {0, 1, 2}")
    for a in range(mod.rank):
        for b in range(mod.rank):
            if adj[a, b] and (mod.trialities[b] - mod.trialities[a]) % 3 != 1:
                raise ModuleError(
                    f"edge {a}->{b} violates the triality grading"
                )
    try:
        table = build_alcove_fusion(adj, mod.level)
    except FusionError as exc:
        raise ModuleError(f"fusion recursion failed: {exc}") from exc
    try:
        ExtendedFusion(table).twist_P()
    except ValueError as exc:
        raise ModuleError(f"P-twist validation failed: {exc}") from exc


def load_module_file(path: str | Path) -> QuantumModule:
    """Parse and validate a module file (format documented in the README)."""
    path = Path(path)
    lines: list[tuple[int, str]] = []
    with open(path) as fh:
        for lineno, raw in enumerate(fh, start=1):
            stripped = raw.split("#", 1)[0].strip()
            if stripped:
                lines.append((lineno, stripped))

    def take(expected_key: str) -> tuple[int, str]:
        if not lines:
            raise ModuleParseError(f"{path}: unexpected end of file, expected '{expected_key}:'")
        lineno, content = lines.pop(0)
        if ":" not in content:
            raise ModuleParseError(f"{path}:{lineno}: expected '{expected_key}: ...'")
        key, _, value = content.partition(":")
        if key.strip() != expected_key:
            raise ModuleParseError(
                f"{path}:{lineno}: expected key '{expected_key}', got '{key.strip()}'"
            )
        return lineno, value.strip()

    _, name = take("name")
    lineno, level_s = take("level")
    try:
        level = int(level_s)
    except ValueError:
        raise ModuleParseError(f"{path}:{lineno}: level must be an integer") from None
    lineno, rank_s = take("rank")
    try:
        rank = int(rank_s)
    except ValueError:
        raise ModuleParseError(f"{path}:{lineno}: rank must be an integer") from None
    if rank <= 0:
        raise ModuleParseError(f"{path}:{lineno}: rank must be positive")
    lineno, tri_s = take("triality")
    tri_parts = tri_s.split()
    if len(tri_parts) != rank:
        raise ModuleParseError(
            f"{path}:{lineno}: triality line has {len(tri_parts)} entries, expected {rank}"
        )
    try:
        trialities = tuple(int(t) for t in tri_parts)
    except ValueError:
        raise ModuleParseError(f"{path}:{lineno}: trialities must be integers") from None
    lineno, rest = take("adjacency")
    if rest:
        raise ModuleParseError(f"{path}:{lineno}: 'adjacency:' takes no inline value")
    rows = []
    for _ in range(rank):
        if not lines:
            raise ModuleParseError(f"{path}: unexpected end of file inside adjacency block")
        lineno, content = lines.pop(0)
        parts = content.split()
        if len(parts) != rank:
            raise ModuleParseError(
                f"{path}:{lineno}: adjacency row has {len(parts)} entries, expected {rank}"
            )
        try:
            rows.append([int(x) for x in parts])
        except ValueError:
            raise ModuleParseError(
                f"{path}:{lineno}: adjacency entries must be integers"
            ) from None
    if lines:
        lineno, _ = lines[0]
        raise ModuleParseError(f"{path}:{lineno}: trailing content after adjacency block")

    mod = QuantumModule(
        name=name,
        level=level,
        rank=rank,
        adjacency=np.array(rows, dtype=np.int64),
        trialities=trialities,
    )
    validate_module(mod)
    return mod


def get_module(name: str, k: int) -> QuantumModule:
    """Return a validated module datum for the supported (name, level) pairs."""
    if name == "A":
        if k < 0:
            raise ModuleError(f"A-series level must be non-negative, got {k}")
        adj, trialities = builtin_A_generator(k)
        mod = QuantumModule(
            name=f"A{k}", level=k, rank=adj.shape[0], adjacency=adj, trialities=trialities
        )
        validate_module(mod)
        return mod
    if name == "D" and k % 3 != 0:
        raise ModuleError(f"D-series requires level = 0 mod 3, got {k}")
    try:
        filename = BUNDLED[(name, k)]
    except KeyError:
        raise ModuleError(f"unknown module ({name}, {k})") from None
    return load_module_file(_data_dir() / filename)


def supported_modules() -> list[tuple[str, int]]:
    """All (name, level) pairs `get_module` accepts out of the box (A listed for k<=6)."""
    return [("A", k) for k in range(7)] + sorted(BUNDLED)
