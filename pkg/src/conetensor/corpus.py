"""Bundled example cones and polytopes, stored as documents and parsed on demand."""

import logging
from functools import lru_cache
from pathlib import Path
from typing import Dict, List, Union

from .bodies import Polytope
from .cone import Cone
from .documents import DocumentImporter
from .exceptions import DocumentError

logger = logging.getLogger(__name__)

CONE_DOCUMENTS: Dict[str, dict] = {
    "std1": {"dim": 1, "rays": [[1]]},
    "std2": {"dim": 2, "rays": [[1, 0], [0, 1]]},
    "std3": {"dim": 3, "rays": [[1, 0, 0], [0, 1, 0], [0, 0, 1]]},
    "ray2": {"dim": 2, "rays": [[1, 0]]},
    # Square cone: c >= |a| + |b|
    "Q": {"dim": 3, "rays": [[1, 1, 1], [1, -1, 1], [-1, 1, 1], [-1, -1, 1]]},
    "Qstar": {"dim": 3, "rays": [[1, 0, 1], [-1, 0, 1], [0, 1, 1], [0, -1, 1]]},
    "halfplane": {"dim": 2, "inequalities": [[0, 1]]},
    "zero2": {"dim": 2, "rays": []},
    "full2": {"dim": 2, "inequalities": []},
    "space0": {"dim": 0, "rays": []},
    "pentagon": {"dim": 3, "rays": [[1, 0, 1], [0, 1, 1], [-1, 1, 1], [-1, -1, 1], [1, -1, 1]]},
}

POLYTOPE_DOCUMENTS: Dict[str, dict] = {
    "segment": {"dim": 1, "vertices": [[-1], [1]]},
    "shifted": {"dim": 1, "vertices": [[2], [3]]},
    "origin": {"dim": 1, "vertices": [[0]]},
    "square": {"dim": 2, "vertices": [[1, 1], [1, -1], [-1, 1], [-1, -1]]},
    "cross2": {"dim": 2, "vertices": [[1, 0], [-1, 0], [0, 1], [0, -1]]},
    "cube3": {
        "dim": 3,
        "vertices": [[a, b, c] for a in (-1, 1) for b in (-1, 1) for c in (-1, 1)],
    },
    "cross3": {
        "dim": 3,
        "vertices": [[1, 0, 0], [-1, 0, 0], [0, 1, 0], [0, -1, 0], [0, 0, 1], [0, 0, -1]],
    },
}

SYMMETRIC_POLYTOPES = ("segment", "origin", "square", "cross2", "cube3", "cross3")


def cone_names() -> List[str]:
    return sorted(CONE_DOCUMENTS)


def polytope_names() -> List[str]:
    return sorted(POLYTOPE_DOCUMENTS)


def _strip_suffix(name: str) -> str:
    return name[:-5] if name.endswith(".json") else name


# Cones are immutable, so a shared cache is semantically invisible.
@lru_cache(maxsize=None)
def get_cone(name: str) -> Cone:
    key = _strip_suffix(name)
    if key not in CONE_DOCUMENTS:
        raise DocumentError(f"unknown bundled cone '{name}' (known: {', '.join(cone_names())})")
    doc = dict(CONE_DOCUMENTS[key], name=key)
    return DocumentImporter(strict=True).parse_cone(doc, f"corpus:{key}")


@lru_cache(maxsize=None)
def get_polytope(name: str) -> Polytope:
    key = _strip_suffix(name)
    if key not in POLYTOPE_DOCUMENTS:
        raise DocumentError(f"unknown bundled polytope '{name}' (known: {', '.join(polytope_names())})")
    doc = dict(POLYTOPE_DOCUMENTS[key], name=key)
    return DocumentImporter(strict=True).parse_polytope(doc, f"corpus:{key}")


def resolve_cone(ref: Union[str, Path]) -> Cone:
    """A JSON file path if one exists, otherwise a bundled cone name."""
    path = Path(ref)
    if path.is_file():
        return DocumentImporter().load_cone(path)
    return get_cone(str(ref))


def resolve_polytope(ref: Union[str, Path]) -> Polytope:
    path = Path(ref)
    if path.is_file():
        return DocumentImporter().load_polytope(path)
    return get_polytope(str(ref))
