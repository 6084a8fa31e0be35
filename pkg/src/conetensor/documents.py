import json
import logging
from fractions import Fraction
from pathlib import Path
from typing import Any, Dict, List, Optional

from .bodies import Polytope, polytope_from_points
from .cone import Cone, ConeRepInput, cone_from
from .config import ConfigManager
from .constants import CONE_FIELDS, FORMAT_VERSION, POLYTOPE_FIELDS
from .exceptions import ConeTensorError, DocumentError, DoubleDescriptionLimitError

logger = logging.getLogger(__name__)


def _scalar_to_json(x) -> Any:
    """Integers stay integers, other rationals become "p/q" strings."""
    f = Fraction(x)
    return f.numerator if f.denominator == 1 else f"{f.numerator}/{f.denominator}"


def vectors_to_json(vectors) -> List[List[Any]]:
    return [[_scalar_to_json(x) for x in v] for v in vectors]


class DocumentImporter:
    """Parses cone and polytope JSON documents.

    Cone documents carry ``dim`` plus ``rays``/``lineality`` and/or
    ``inequalities``/``equations``; polytope documents carry ``dim`` and
    ``vertices``. Entries are integers or ``"p/q"`` strings.
    """

    def __init__(self, strict: Optional[bool] = None) -> None:
        if strict is None:
            strict = bool(ConfigManager.load_config().get("strict_documents", True))
        self.strict = strict

    # --- Numbers and vectors ---
    def _number(self, value, source: str) -> Fraction:
        if isinstance(value, bool):
            raise DocumentError(f"booleans are not numbers: {value!r}", source)
        if isinstance(value, int):
            return Fraction(value)
        if isinstance(value, str):
            try:
                return Fraction(value.strip())
            except (ValueError, ZeroDivisionError):
                raise DocumentError(f"malformed number {value!r}", source) from None
        raise DocumentError(f"numbers must be integers or 'p/q' strings, got {value!r}", source)

    def _vectors(self, data: Dict[str, Any], key: str, dim: int, source: str) -> Optional[List[tuple]]:
        if key not in data:
            return None
        raw = data[key]
        if not isinstance(raw, list):
            raise DocumentError(f"'{key}' must be a list of vectors", source)
        vectors = []
        for k, row in enumerate(raw):
            if not isinstance(row, list):
                raise DocumentError(f"'{key}[{k}]' must be a list", source)
            if len(row) != dim:
                raise DocumentError(f"'{key}[{k}]' has {len(row)} entries, expected {dim}", source)
            vectors.append(tuple(self._number(x, source) for x in row))
        return vectors

    def _header(self, data: Any, allowed, source: str) -> int:
        if not isinstance(data, dict):
            raise DocumentError("the document must be a JSON object", source)
        version = data.get("format_version", FORMAT_VERSION)
        if str(version) != FORMAT_VERSION:
            raise DocumentError(f"unsupported format_version {version!r}", source)
        if self.strict:
            unknown = sorted(set(data) - set(allowed))
            if unknown:
                raise DocumentError(f"unknown fields {unknown}", source)
        dim = data.get("dim")
        if isinstance(dim, bool) or not isinstance(dim, int) or dim < 0:
            raise DocumentError(f"'dim' must be a non-negative integer, got {dim!r}", source)
        return dim

    # --- Cones ---
    def parse_cone(self, data: Any, source: str = "") -> Cone:
        dim = self._header(data, CONE_FIELDS, source)
        rep = ConeRepInput(
            dim=dim,
            rays=self._vectors(data, "rays", dim, source),
            lineality=self._vectors(data, "lineality", dim, source),
            ineqs=self._vectors(data, "inequalities", dim, source),
            eqs=self._vectors(data, "equations", dim, source),
            name=str(data.get("name", "")),
        )
        if not rep.has_v and not rep.has_h:
            raise DocumentError("a cone needs rays/lineality or inequalities/equations", source)
        try:
            return cone_from(rep)
        except (DocumentError, DoubleDescriptionLimitError):
            raise
        except ConeTensorError as e:
            raise DocumentError(str(e), source) from e

    def load_cone(self, path: Path | str) -> Cone:
        path = Path(path)
        data = self._read(path)
        cone = self.parse_cone(data, str(path))
        if not cone.name:
            cone = cone.named(path.stem)
        logger.info(f"Loaded {cone} from {path}")
        return cone

    # --- Polytopes ---
    def parse_polytope(self, data: Any, source: str = "") -> Polytope:
        dim = self._header(data, POLYTOPE_FIELDS, source)
        vertices = self._vectors(data, "vertices", dim, source)
        if not vertices:
            raise DocumentError("a polytope needs a non-empty 'vertices' list", source)
        return polytope_from_points(vertices, dim, str(data.get("name", "")))

    def load_polytope(self, path: Path | str) -> Polytope:
        path = Path(path)
        polytope = self.parse_polytope(self._read(path), str(path))
        logger.info(f"Loaded {polytope} from {path}")
        return polytope

    def _read(self, path: Path) -> Any:
        try:
            with open(path, "r", encoding="utf-8") as f:
                return json.load(f)
        except FileNotFoundError:
            raise DocumentError("file not found", str(path)) from None
        except json.JSONDecodeError as e:
            raise DocumentError(f"invalid JSON ({e.msg} at line {e.lineno})", str(path)) from None


def emit_cone(cone: Cone) -> Dict[str, Any]:
    """Canonical document with both representations."""
    doc: Dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "dim": cone.dim,
        "rays": vectors_to_json(cone.rays),
        "lineality": vectors_to_json(cone.lineality),
        "inequalities": vectors_to_json(cone.ineqs),
        "equations": vectors_to_json(cone.eqs),
    }
    if cone.name:
        doc["name"] = cone.name
    return doc


def emit_polytope(polytope: Polytope) -> Dict[str, Any]:
    doc: Dict[str, Any] = {
        "format_version": FORMAT_VERSION,
        "dim": polytope.dim,
        "vertices": vectors_to_json(polytope.vertices),
        "symmetric": polytope.symmetric,
    }
    if polytope.name:
        doc["name"] = polytope.name
    return doc


def dumps(doc: Any) -> str:
    """Deterministic JSON text."""
    return json.dumps(doc, sort_keys=True, indent=2) + "\n"
