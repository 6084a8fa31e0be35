# src/conetensor/main.py
"""Backend entry points behind the command line, plus logging setup."""

import logging
from logging.handlers import RotatingFileHandler
from pathlib import Path
from threading import Event
from typing import Any, Callable, Dict, List, Optional, Sequence

from .batch_processor import BatchProcessor, BatchResult
from .bodies import Polytope, tensor_hull
from .cone import Cone, PREDICATES, dual, is_proper, lineality_space
from .corpus import resolve_cone, resolve_polytope
from .documents import vectors_to_json
from .exceptions import DocumentError
from .facelab import SCAND, SCOR, andface, extremal_rays, injective_orface_andface, make_face, orface
from .models import RankOneVerdict
from .suites import SuiteRunner
from .tensorcone import INJECTIVE, PROJECTIVE, rank_one_classify, tensor_cone

LOG_DIR = Path.home() / ".conetensor_logs"
LOG_FORMAT = "%(asctime)s - %(levelname)s - %(message)s"

FACE_OPS = ("orface", "andface", SCOR, SCAND)
KIND_ALIASES = {"min": PROJECTIVE, "max": INJECTIVE, PROJECTIVE: PROJECTIVE, INJECTIVE: INJECTIVE}

logger = logging.getLogger(__name__)
_configured = False


def configure_logging(level: int = logging.INFO, log_dir: Optional[Path] = None) -> None:
    """Install the rotating file handler and a stderr handler, once per process."""
    global _configured
    if _configured:
        return
    handlers: List[logging.Handler] = [logging.StreamHandler()]
    target = log_dir or LOG_DIR
    try:
        target.mkdir(parents=True, exist_ok=True)
        handlers.insert(0, RotatingFileHandler(target / "app.log", maxBytes=1_000_000, backupCount=5, encoding="utf-8"))
    except OSError as e:
        logger.warning(f"File logging disabled: {e}")
    logging.basicConfig(level=level, format=LOG_FORMAT, handlers=handlers)
    _configured = True


def tensor_kind(value: str) -> str:
    try:
        return KIND_ALIASES[value]
    except KeyError:
        raise DocumentError(f"unknown tensor kind '{value}' (use min or max)") from None


def dual_backend(ref: str) -> Cone:
    cone = resolve_cone(ref)
    logger.info(f"Dual of {cone}")
    return dual(cone)


def tensor_backend(left_ref: str, right_ref: str, kind: str) -> Cone:
    e, f = resolve_cone(left_ref), resolve_cone(right_ref)
    logger.info(f"Tensor ({kind}) of {e} and {f}")
    return tensor_cone(e, f, tensor_kind(kind))


def rays_backend(ref: str) -> Dict[str, Any]:
    """Extremal rays (empty unless proper) and the lineality basis."""
    cone = resolve_cone(ref)
    return {
        "dim": cone.dim,
        "proper": is_proper(cone),
        "extremal_rays": vectors_to_json(extremal_rays(cone)),
        "rays": vectors_to_json(cone.rays),
        "lineality": vectors_to_json(cone.lineality),
    }


def lineality_backend(ref: str) -> Dict[str, Any]:
    cone = resolve_cone(ref)
    basis = lineality_space(cone)
    return {"dim": cone.dim, "lineality": vectors_to_json(basis), "dimension": len(basis)}


def check_backend(ref: str) -> Dict[str, Any]:
    cone = resolve_cone(ref)
    flags: Dict[str, Any] = {name: predicate(cone) for name, predicate in PREDICATES.items()}
    flags["dim"] = cone.dim
    return flags


def face_ops_backend(left_ref: str, right_ref: str, op: str, m: Sequence[int], n: Sequence[int]) -> Cone:
    """orface/andface on min(e, f) or SCorface/SCandface on max(e, f), faces given by ray indices."""
    e, f = resolve_cone(left_ref), resolve_cone(right_ref)
    m_face, n_face = make_face(e, m), make_face(f, n)
    logger.info(f"{op} of {m_face} and {n_face}")
    if op == "orface":
        return orface(e, f, m_face, n_face)
    if op == "andface":
        return andface(e, f, m_face, n_face)
    if op in (SCOR, SCAND):
        return injective_orface_andface(e, f, m_face, n_face, op)
    raise DocumentError(f"unknown face operation '{op}' (use one of {', '.join(FACE_OPS)})")


def hull_backend(left_ref: str, right_ref: str) -> Polytope:
    c, d = resolve_polytope(left_ref), resolve_polytope(right_ref)
    return tensor_hull(c, d)


def rank1_backend(left_ref: str, right_ref: str, x: Sequence, y: Sequence, kind: str) -> RankOneVerdict:
    e, f = resolve_cone(left_ref), resolve_cone(right_ref)
    return rank_one_classify(x, y, e, f, tensor_kind(kind))


def verify_backend(
    suite: str,
    progress_callback: Optional[Callable[[int, int, str], None]] = None,
    stop_event: Optional[Event] = None,
    seed: Optional[int] = None,
    workers: Optional[int] = None,
) -> BatchResult:
    """
    Run one suite, an alias, or ``all`` through the batch queue.

    Args:
        suite: Suite name, alias, or ``all``.
        progress_callback: Optional callback for per-suite progress.
        stop_event: Optional threading event for cancellation.
        seed: Overrides the configured random seed.
        workers: Overrides the configured thread pool size.

    Returns:
        BatchResult with one SuiteReport per suite, in canonical suite order.

    Raises:
        UnknownSuiteError: If the suite name is not known.
        DoubleDescriptionLimitError: If a construction exceeds the row cap.
    """
    logger.info(f"Starting verification: {suite}")
    batch = BatchProcessor(SuiteRunner(workers=workers, seed=seed))
    batch.add_job(suite)
    result = batch.process_all(progress_callback=progress_callback, stop_event=stop_event)
    logger.info(f"Verification finished ({batch.get_summary()}), passed={result.passed}")
    return result
