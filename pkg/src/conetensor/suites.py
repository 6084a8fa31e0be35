"""
Verification suites over the bundled corpus.

Each suite is a list of independent tasks; :class:`SuiteRunner` executes them
with a ThreadPoolExecutor and reassembles the results in task order, so the
report does not depend on completion order.
"""

import logging
import random
from concurrent.futures import ThreadPoolExecutor, as_completed
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from itertools import combinations
from threading import Event
from typing import Callable, Dict, List, Optional, Sequence, Union

from .bodies import (
    face_tensor_check,
    hull_slice_check,
    is_extreme_point,
    polytope_faces,
    tensor_hull,
)
from .cone import (
    Cone,
    contains,
    dual,
    is_generating,
    is_proper,
    is_subset,
    make_cone,
    orthant,
    quotient_cone,
)
from .config import ConfigManager
from .constants import (
    FACE_CANDIDATE_SAMPLES,
    GRID_CONES,
    ORACLE_MEMBERSHIP_SAMPLES,
    QUOTIENT_SAMPLES,
    SUITE_ALIASES,
    SUITE_ALL,
    SUITE_NAMES,
)
from .corpus import SYMMETRIC_POLYTOPES, get_cone, get_polytope
from .exactla import (
    RationalMatrix,
    span_basis,
    subspace_contains,
)
from .exceptions import (
    ConeTensorError,
    DoubleDescriptionLimitError,
    IdentityViolationError,
    ImproperFaceError,
    RunCancelledError,
    UnknownSuiteError,
)
from .facelab import (
    SCAND,
    SCOR,
    SUM_FORM,
    TENSOR_PLUS_LINEALITY,
    Face,
    all_faces,
    andface,
    bipositive_ideal_inclusion,
    combined_face,
    dual_face,
    exposed_face,
    extremal_rays,
    face_sublattice_check,
    homomorphism_checks,
    ideal_face,
    injective_face_msetn,
    injective_ideal,
    injective_orface_andface,
    injective_sublattice_check,
    is_face,
    make_face,
    maximal_ideals,
    orface,
    span_is_ideal,
)
from .models import CheckResult, SuiteReport, format_vector
from .oracle import extremality_definitional, face_definitional, membership_fm_cone
from .tensorcone import (
    INJECTIVE,
    PROJECTIVE,
    TensorSpace,
    injective_lineality,
    is_bipositive,
    is_order_retract,
    is_positive_map,
    is_reasonable,
    kron_map,
    projective_lineality,
    properness_expected,
    pushforward_check,
    rank_one_agreement,
    rank_one_classify,
    rank_one_dual_clause,
    rank_one_rays,
    separating_witness,
    tensor_cone,
    tensor_rays,
    vec_tensor,
)

logger = logging.getLogger(__name__)

TaskResult = Union[CheckResult, List[CheckResult]]


@dataclass(frozen=True)
class Task:
    suite: str
    name: str
    run: Callable[[], TaskResult]


# --- Shared, cached constructions (cones are immutable) ---
@lru_cache(maxsize=None)
def tensor_of(left: str, right: str, kind: str) -> Cone:
    return tensor_cone(get_cone(left), get_cone(right), kind)


@lru_cache(maxsize=None)
def faces_of(name: str) -> tuple:
    return tuple(all_faces(get_cone(name)))


def _face_label(face: Face) -> str:
    return f"{face.parent.name}{list(face.ray_subset)}"


def _cone_witness(a: Cone, b: Cone) -> Optional[List[str]]:
    return format_vector(separating_witness(a, b) or separating_witness(b, a))


def _subspace_witness(a: Sequence, b: Sequence, dim: int) -> Optional[List[str]]:
    for v in a:
        if not subspace_contains(b, [v], dim):
            return format_vector(v)
    for v in b:
        if not subspace_contains(a, [v], dim):
            return format_vector(v)
    return None


def _check(suite: str, name: str, passed: bool, detail: str = "", witness=None, **data) -> CheckResult:
    return CheckResult(suite=suite, name=name, passed=bool(passed), detail=detail, witness=witness, data=data)


def _matrix(rows: Sequence[Sequence], cols: int) -> RationalMatrix:
    return RationalMatrix.from_rows([list(r) for r in rows], cols)


def _identity(n: int) -> RationalMatrix:
    return RationalMatrix.identity(n)


# --- Properness (thmA, thmB) ---
def _properness_task(suite: str, left: str, right: str, kind: str) -> Task:
    def run() -> CheckResult:
        cone = tensor_of(left, right, kind)
        actual = is_proper(cone)
        expected = properness_expected(get_cone(left), get_cone(right), kind)
        label = "min" if kind == PROJECTIVE else "max"
        return _check(
            suite,
            f"{label}({left},{right}) proper = {expected}",
            actual == expected,
            witness=format_vector(cone.lineality[0]) if cone.lineality and expected else None,
            proper=actual,
            expected=expected,
        )

    return Task(suite, f"{left}x{right}", run)


def build_thm_a(rng: random.Random) -> List[Task]:
    return [_properness_task("thmA", a, b, PROJECTIVE) for a in GRID_CONES for b in GRID_CONES]


def build_thm_b(rng: random.Random) -> List[Task]:
    suite = "thmB"
    tasks = [_properness_task(suite, a, b, INJECTIVE) for a in GRID_CONES for b in GRID_CONES]

    def duality_and_sandwich(left: str, right: str) -> Task:
        def run() -> List[CheckResult]:
            e, f = get_cone(left), get_cone(right)
            lower, upper = tensor_of(left, right, PROJECTIVE), tensor_of(left, right, INJECTIVE)
            from_duals = dual(tensor_cone(dual(e), dual(f), PROJECTIVE))
            return [
                _check(suite, f"max({left},{right}) = dual(min(dual,dual))", upper == from_duals,
                       witness=_cone_witness(upper, from_duals)),
                _check(suite, f"min({left},{right}) <= max({left},{right})", is_subset(lower, upper),
                       witness=format_vector(separating_witness(lower, upper))),
            ]

        return Task(suite, f"duality {left}x{right}", run)

    tasks += [duality_and_sandwich(a, b) for a in GRID_CONES for b in GRID_CONES]

    def strict_inclusion() -> List[CheckResult]:
        lower, upper = tensor_of("Q", "Qstar", PROJECTIVE), tensor_of("Q", "Qstar", INJECTIVE)
        witness = separating_witness(upper, lower)
        collapse_min, collapse_max = tensor_of("std3", "Qstar", PROJECTIVE), tensor_of("std3", "Qstar", INJECTIVE)
        return [
            _check(suite, "min(Q,Qstar) strictly inside max(Q,Qstar)",
                   is_subset(lower, upper) and lower != upper and witness is not None,
                   detail="witness lies in max but not in min", witness=format_vector(witness)),
            _check(suite, "min(std3,Qstar) = max(std3,Qstar)", collapse_min == collapse_max,
                   witness=_cone_witness(collapse_min, collapse_max)),
        ]

    def reasonable() -> List[CheckResult]:
        e, f = get_cone("Q"), get_cone("Qstar")
        lower, upper = tensor_of("Q", "Qstar", PROJECTIVE), tensor_of("Q", "Qstar", INJECTIVE)
        return [
            _check(suite, "min(Q,Qstar) is reasonable", is_reasonable(lower, e, f)),
            _check(suite, "max(Q,Qstar) is reasonable", is_reasonable(upper, e, f)),
            _check(suite, "std9 is not reasonable for (Q,Qstar)", not is_reasonable(orthant(9), e, f)),
        ]

    tasks.append(Task(suite, "strict inclusion", strict_inclusion))
    tasks.append(Task(suite, "reasonable cones", reasonable))
    return tasks


# --- Lineality (thmC) ---
def build_thm_c(rng: random.Random) -> List[Task]:
    suite = "thmC"

    def cell(left: str, right: str) -> Task:
        def run() -> List[CheckResult]:
            e, f = get_cone(left), get_cone(right)
            dim = e.dim * f.dim
            proj = projective_lineality(e, f)
            inj = injective_lineality(e, f)
            lower = list(tensor_of(left, right, PROJECTIVE).lineality)
            upper = list(tensor_of(left, right, INJECTIVE).lineality)
            return [
                _check(suite, f"lin(min({left},{right})) formula", proj == lower,
                       witness=_subspace_witness(proj, lower, dim), dimension=len(lower)),
                _check(suite, f"lin(max({left},{right})) formula", inj == upper,
                       witness=_subspace_witness(inj, upper, dim), dimension=len(upper)),
            ]

        return Task(suite, f"{left}x{right}", run)

    return [cell(a, b) for a in GRID_CONES for b in GRID_CONES]


# --- Faces (thmD_faces) ---
def build_thm_d(rng: random.Random) -> List[Task]:
    suite = "thmD_faces"
    tasks: List[Task] = []

    def transport(left: str, right: str, m: Face, n: Face) -> Task:
        def run() -> List[CheckResult]:
            e, f = get_cone(left), get_cone(right)
            lower, upper = tensor_of(left, right, PROJECTIVE), tensor_of(left, right, INJECTIVE)
            label = f"({_face_label(m)},{_face_label(n)})"
            results = []
            for kind, build, parent in (
                ("orface", lambda: orface(e, f, m, n), lower),
                ("andface", lambda: andface(e, f, m, n), lower),
                (SCOR, lambda: injective_orface_andface(e, f, m, n, SCOR), upper),
                (SCAND, lambda: injective_orface_andface(e, f, m, n, SCAND), upper),
            ):
                try:
                    face = build()
                except IdentityViolationError as err:
                    results.append(_check(suite, f"{kind}{label}", False, detail=str(err), witness=err.witness))
                    continue
                main = is_face(parent, face)
                slow = face_definitional(parent, face)
                results.append(_check(suite, f"{kind}{label} is a face", main and slow,
                                      detail=f"main={main} oracle={slow}", rays=len(face.rays)))
            return results

        return Task(suite, f"transport {left}x{right} {m.ray_subset} {n.ray_subset}", run)

    for left, right in (("std2", "std2"), ("Q", "Qstar")):
        for m in faces_of(left):
            for n in faces_of(right):
                tasks.append(transport(left, right, m, n))

    def sublattice(left: str, right: str, m: Face, n: Face) -> Task:
        def run() -> List[CheckResult]:
            label = f" at ({_face_label(m)},{_face_label(n)})"
            e, f = get_cone(left), get_cone(right)
            checks = face_sublattice_check(e, f, m, n, suite) + injective_sublattice_check(e, f, m, n, suite)
            for c in checks:
                c.name += label
            return checks

        return Task(suite, f"sublattice {left}x{right} {m.ray_subset} {n.ray_subset}", run)

    for m in faces_of("std2"):
        for n in faces_of("std2"):
            tasks.append(sublattice("std2", "std2", m, n))
    # minimal face, a ray, a facet and the whole cone
    q_sample, qs_sample = faces_of("Q"), faces_of("Qstar")
    for m in (q_sample[0], q_sample[1], q_sample[5], q_sample[-1]):
        for n in (qs_sample[0], qs_sample[1], qs_sample[5], qs_sample[-1]):
            tasks.append(sublattice("Q", "Qstar", m, n))

    def combined(left: str, right: str, m1, n1, m2, n2) -> Task:
        def run() -> CheckResult:
            e, f = get_cone(left), get_cone(right)
            faces = [make_face(e, m1), make_face(f, n1), make_face(e, m2), make_face(f, n2)]
            label = f"combined face {left}x{right} {m1},{n1} + {m2},{n2}"
            try:
                result = combined_face(e, f, faces[0], faces[1], faces[2], faces[3])
            except IdentityViolationError as err:
                return _check(suite, label, False, detail=str(err), witness=err.witness)
            return _check(suite, label, True, rays=len(result.rays))

        return Task(suite, f"combined {left}x{right} {m1} {n1} {m2} {n2}", run)

    tasks.append(combined("std2", "std2", (0,), (0,), (1,), (1,)))
    tasks.append(combined("Q", "Qstar", (0,), (0,), (3,), (1,)))
    tasks.append(combined("Q", "Qstar", (0, 1), (0,), (2, 3), (2,)))

    def msetn() -> List[CheckResult]:
        std2 = get_cone("std2")
        ray_e1 = make_face(std2, (std2.rays.index((1, 0)),))
        low = make_face(std2, ())
        first = injective_face_msetn(std2, std2, list(std2.ineqs), low)
        second = injective_face_msetn(std2, std2, [(1, 0)], ray_e1)
        expected = make_cone(4, rays=[(1, 0, 0, 0), (0, 0, 1, 0), (0, 0, 0, 1)])
        q, qs = get_cone("Q"), get_cone("Qstar")
        third = injective_face_msetn(q, qs, [q.ineqs[0]], make_face(qs, (0,)))
        upper = tensor_of("Q", "Qstar", INJECTIVE)
        return [
            _check(suite, "<dual(std2) > minimal face> is zero", not first.rays and not first.lineality),
            _check(suite, "<(1,0) > e1> = cone(e1e1, e2e1, e2e2)", second == expected,
                   witness=_cone_witness(second, expected)),
            _check(suite, "<phi > ray> is a face of max(Q,Qstar)",
                   is_face(upper, third) and face_definitional(upper, third)),
        ]

    tasks.append(Task(suite, "msetn examples", msetn))
    return tasks


# --- Ideals (thmE_ideals) ---
def build_thm_e(rng: random.Random) -> List[Task]:
    suite = "thmE_ideals"

    def pair(m: Face, n: Face) -> Task:
        def run() -> List[CheckResult]:
            e, f = get_cone("Q"), get_cone("Qstar")
            i, j = span_is_ideal(e, m), span_is_ideal(f, n)
            label = f"({_face_label(m)},{_face_label(n)})"
            results = []
            for kind in (TENSOR_PLUS_LINEALITY, SUM_FORM):
                basis, verdict = injective_ideal(e, f, i, j, kind)
                results.append(_check(suite, f"{kind}{label} is an ideal", verdict, dimension=len(basis)))
            results.append(_check(suite, f"I(x)J inclusion bipositive{label}", bipositive_ideal_inclusion(e, f, i, j)))
            return results

        return Task(suite, f"ideals {m.ray_subset} {n.ray_subset}", run)

    tasks = [pair(m, n) for m in faces_of("Q") for n in faces_of("Qstar")]

    def lineality_examples() -> List[CheckResult]:
        half, zero = get_cone("halfplane"), get_cone("ray2")
        i = span_is_ideal(half, make_face(half, ()))
        j = span_is_ideal(zero, make_face(zero, ()))
        basis, verdict = injective_ideal(half, zero, i, j, TENSOR_PLUS_LINEALITY)
        full = get_cone("full2")
        whole = span_is_ideal(full, make_face(full, ()))
        top, top_verdict = injective_ideal(full, full, whole, whole, SUM_FORM)
        return [
            _check(suite, "lineality ideal (x) {0} + lin = lin(max)",
                   basis == injective_lineality(half, zero) and verdict,
                   witness=_subspace_witness(basis, injective_lineality(half, zero), 4)),
            _check(suite, "whole spaces give the whole tensor space", len(top) == 4 and top_verdict),
        ]

    tasks.append(Task(suite, "lineality examples", lineality_examples))
    return tasks


# --- Extremal rays (thmF_rays) ---
THM_F_EXTRA_PAIRS = (("pentagon", "std2"), ("std2", "pentagon"), ("pentagon", "halfplane"), ("std3", "Qstar"))


def build_thm_f(rng: random.Random) -> List[Task]:
    suite = "thmF_rays"

    def cell(left: str, right: str) -> Task:
        def run() -> List[CheckResult]:
            e, f = get_cone(left), get_cone(right)
            actual = extremal_rays(tensor_of(left, right, PROJECTIVE))
            expected = tensor_rays(make_cone(e.dim, rays=extremal_rays(e)), make_cone(f.dim, rays=extremal_rays(f)))
            missing = sorted(set(expected) - set(actual)) or sorted(set(actual) - set(expected))
            results = [
                _check(suite, f"rext(min({left},{right})) = rext(E) (x) rext(F)", sorted(actual) == expected,
                       witness=format_vector(missing[0]) if missing else None, rays=len(actual)),
            ]
            if is_proper(e) and is_proper(f):
                upper = tensor_of(left, right, INJECTIVE)
                outside = [r for r in expected if r not in set(upper.rays)]
                results.append(_check(suite, f"rext(E) (x) rext(F) extremal in max({left},{right})", not outside,
                                      witness=format_vector(outside[0]) if outside else None,
                                      rays=len(upper.rays)))
            return results

        return Task(suite, f"{left}x{right}", run)

    tasks = [cell(a, b) for a in GRID_CONES for b in GRID_CONES]
    tasks += [cell(a, b) for a, b in THM_F_EXTRA_PAIRS]

    def rank_structure() -> List[CheckResult]:
        upper = tensor_of("Q", "Qstar", INJECTIVE)
        expected = tensor_rays(get_cone("Q"), get_cone("Qstar"))
        low, high = rank_one_rays(upper, TensorSpace(3, 3))
        return [
            _check(suite, "|rext(min(Q,Qstar))| = 16", len(extremal_rays(tensor_of("Q", "Qstar", PROJECTIVE))) == 16,
                   rays=len(extremal_rays(tensor_of("Q", "Qstar", PROJECTIVE)))),
            _check(suite, "rank-one rays of max(Q,Qstar) are the 16 tensor rays", sorted(low) == expected,
                   rank_one=len(low)),
            _check(suite, "max(Q,Qstar) has a ray of rank >= 2", bool(high),
                   witness=format_vector(high[0]) if high else None, higher_rank=len(high)),
        ]

    tasks.append(Task(suite, "rank structure of max(Q,Qstar)", rank_structure))
    return tasks


# --- Rank-one classification (rank1) ---
RANK1_PAIRS = (("Q", "Qstar"), ("halfplane", "std1"), ("halfplane", "ray2"), ("std2", "halfplane"), ("zero2", "std2"))


def _sample_vectors(c: Cone, rng: random.Random, count: int = 3) -> List[tuple]:
    vectors = list(c.generators()) + [tuple(-x for x in g) for g in c.rays]
    for _ in range(count):
        vectors.append(tuple(rng.randint(-2, 2) for _ in range(c.dim)))
    return sorted({v for v in vectors if any(v)})


def build_rank1(rng: random.Random) -> List[Task]:
    suite = "rank1"
    tasks = []
    for left, right in RANK1_PAIRS:
        xs = _sample_vectors(get_cone(left), rng)
        ys = _sample_vectors(get_cone(right), rng)
        for kind in (PROJECTIVE, INJECTIVE):

            def run(left=left, right=right, kind=kind, xs=xs, ys=ys) -> List[CheckResult]:
                e, f = get_cone(left), get_cone(right)
                cone = tensor_of(left, right, kind)
                results = []
                for x in xs:
                    for y in ys:
                        verdict = rank_one_classify(x, y, e, f, kind)
                        member = contains(cone, vec_tensor(x, y))
                        if verdict.member != member:
                            results.append(_check(suite, f"{kind} {left}x{right} clause {verdict.clause}", False,
                                                  witness=format_vector(vec_tensor(x, y))))
                results.append(_check(suite, f"{kind} {left}x{right}: clauses agree with membership", not results,
                                      samples=len(xs) * len(ys)))
                return results

            tasks.append(Task(suite, f"{kind} {left}x{right}", run))

        def dual_clause(left=left, right=right, xs=xs, ys=ys) -> List[CheckResult]:
            e, f = get_cone(left), get_cone(right)
            high = tensor_of(left, right, INJECTIVE)
            misses = [vec_tensor(x, y) for x in xs for y in ys
                      if rank_one_dual_clause(x, y, e, f) != contains(high, vec_tensor(x, y))]
            return [_check(suite, f"dual functional clause {left}x{right} agrees with max", not misses,
                           witness=format_vector(misses[0]) if misses else None, samples=len(xs) * len(ys))]

        tasks.append(Task(suite, f"dual clause {left}x{right}", dual_clause))
        if is_generating(get_cone(left)) and is_generating(get_cone(right)):

            def agreement(left=left, right=right, xs=xs, ys=ys) -> List[CheckResult]:
                e, f = get_cone(left), get_cone(right)
                low, high = tensor_of(left, right, PROJECTIVE), tensor_of(left, right, INJECTIVE)
                extra = [g for g in high.generators() if not contains(low, g)][:1]
                middle = make_cone(low.dim, rays=list(low.generators()) + extra)
                cones = (low, middle, high)
                misses = [vec_tensor(x, y) for x in xs for y in ys if not rank_one_agreement(x, y, cones)]
                return [
                    _check(suite, f"intermediate cone of {left}x{right} is reasonable", is_reasonable(middle, e, f)),
                    _check(suite, f"reasonable cones of {left}x{right} agree on rank-one tensors", not misses,
                           witness=format_vector(misses[0]) if misses else None, strict=bool(extra)),
                ]

            tasks.append(Task(suite, f"agreement {left}x{right}", agreement))

    def examples() -> List[CheckResult]:
        q, qs, half, std1 = get_cone("Q"), get_cone("Qstar"), get_cone("halfplane"), get_cone("std1")
        positive = rank_one_classify((1, 1, 1), (1, 0, 1), q, qs, INJECTIVE)
        negated = rank_one_classify((-1, -1, -1), (-1, 0, -1), q, qs, PROJECTIVE)
        lineal = rank_one_classify((1, 0), (1,), half, std1, PROJECTIVE)
        return [
            _check(suite, "positive pair clause", positive.member and positive.clause == "positive-pair"),
            _check(suite, "negated pair clause", negated.member and negated.clause == "negated-pair"),
            _check(suite, "left lineality clause", lineal.member and lineal.clause == "left-lineality"),
        ]

    tasks.append(Task(suite, "examples", examples))
    return tasks


# --- Bodies ---
def build_bodies(rng: random.Random) -> List[Task]:
    suite = "bodies"
    tasks = []

    def slices() -> List[CheckResult]:
        seg, sq, origin = get_polytope("segment"), get_polytope("square"), get_polytope("origin")
        return [
            _check(suite, "slice of min(hom seg, hom seg) = seg (x) seg", hull_slice_check(seg, seg)),
            _check(suite, "slice of min(hom seg, hom square) = seg (x) square", hull_slice_check(seg, sq)),
            _check(suite, "slice of min(hom origin, hom seg) = origin (x) seg", hull_slice_check(origin, seg)),
        ]

    tasks.append(Task(suite, "homogenized slices", slices))

    def preservation(left: str, right: str) -> Task:
        def run() -> CheckResult:
            c, d = get_polytope(left), get_polytope(right)
            hull = tensor_hull(c, d)
            lost = [vec_tensor(x, y) for x in c.vertices for y in d.vertices if not is_extreme_point(hull, vec_tensor(x, y))]
            return _check(suite, f"ext({left}) (x) ext({right}) extreme in the tensor hull", not lost,
                          witness=format_vector(lost[0]) if lost else None, vertices=len(hull.vertices))

        return Task(suite, f"extreme {left}x{right}", run)

    for left in SYMMETRIC_POLYTOPES:
        for right in SYMMETRIC_POLYTOPES:
            if left == "segment" or right == "segment" or get_polytope(left).dim * get_polytope(right).dim <= 4:
                tasks.append(preservation(left, right))

    def counterexample() -> List[CheckResult]:
        hull = tensor_hull(get_polytope("segment"), get_polytope("shifted"))
        return [
            _check(suite, "conv([-1,1] (x) [2,3]) = [-3,3]", hull.vertices == ((Fraction(-3),), (Fraction(3),))),
            _check(suite, "1 (x) 2 is not extreme", not is_extreme_point(hull, (2,))),
        ]

    tasks.append(Task(suite, "non-symmetric counterexample", counterexample))

    def face_products() -> List[CheckResult]:
        seg, sq = get_polytope("segment"), get_polytope("square")
        top = seg.vertices.index((Fraction(1),))
        edge = tuple(k for k, v in enumerate(sq.vertices) if v[0] == 1)
        try:
            face_tensor_check(seg, seg, tuple(range(len(seg.vertices))), (top,))
            improper_rejected = False
        except ImproperFaceError:
            improper_rejected = True
        return [
            _check(suite, "{1} (x) {1} is a face of seg (x) seg", face_tensor_check(seg, seg, (top,), (top,))),
            _check(suite, "edge (x) {1} is a face of square (x) seg", face_tensor_check(sq, seg, edge, (top,))),
            _check(suite, "improper face is rejected", improper_rejected),
        ]

    tasks.append(Task(suite, "face products", face_products))

    def faithfulness(name: str, expected: int) -> Task:
        def run() -> CheckResult:
            faces = polytope_faces(get_polytope(name))
            return _check(suite, f"{name} has {expected} non-empty faces", len(faces) == expected, faces=len(faces))

        return Task(suite, f"faces {name}", run)

    for name, expected in (("square", 9), ("cross2", 9), ("cube3", 27), ("cross3", 27)):
        tasks.append(faithfulness(name, expected))
    return tasks


# --- Appendix ---
APPENDIX_CONES = ("std1", "std2", "std3", "ray2", "Q", "Qstar", "halfplane", "zero2", "full2", "pentagon")
RANDOM_CONES = ("std2", "std3", "ray2", "Q", "Qstar", "halfplane", "pentagon", "full2")


def build_appendix(rng: random.Random) -> List[Task]:
    suite = "appendix"
    tasks = []

    # Random candidates are drawn here so the run is reproducible from the seed
    candidates = []
    for _ in range(FACE_CANDIDATE_SAMPLES):
        name = rng.choice(RANDOM_CONES)
        c = get_cone(name)
        rays = [r for r in c.rays if rng.random() < 0.5]
        if len(c.rays) >= 2 and rng.random() < 0.3:
            a, b = rng.sample(list(c.rays), 2)
            rays.append(tuple(x + y for x, y in zip(a, b)))
        lineality = list(c.lineality) if rng.random() < 0.85 else []
        candidates.append((name, rays, lineality))

    def candidate_batch(batch) -> Task:
        def run() -> List[CheckResult]:
            results = []
            for name, rays, lineality in batch:
                c = get_cone(name)
                cand = make_cone(c.dim, rays=rays, lineality=lineality)
                main, slow = is_face(c, cand), face_definitional(c, cand)
                if main != slow:
                    results.append(_check(suite, f"face test disagreement on {name}", False,
                                          detail=f"main={main} oracle={slow}",
                                          witness=format_vector(rays[0]) if rays else None))
            results.append(_check(suite, f"face = full subcone on {len(batch)} candidates", not results))
            return results

        return Task(suite, "face candidates", run)

    for k in range(0, len(candidates), 25):
        tasks.append(candidate_batch(candidates[k:k + 25]))

    def faces_and_ideals(name: str) -> Task:
        def run() -> List[CheckResult]:
            c = get_cone(name)
            bad = []
            for face in faces_of(name):
                ideal = span_is_ideal(c, face)
                if ideal_face(ideal) != face:
                    bad.append(face)
            return [_check(suite, f"span(M) cap {name} = M for every face", not bad,
                           detail=", ".join(_face_label(f) for f in bad), faces=len(faces_of(name)))]

        return Task(suite, f"ideals {name}", run)

    tasks += [faces_and_ideals(n) for n in APPENDIX_CONES]

    def dual_laws(name: str) -> Task:
        def run() -> List[CheckResult]:
            c = get_cone(name)
            d = dual(c)
            results = [
                _check(suite, f"dual(dual({name})) = {name}", dual(d) == c),
                _check(suite, f"{name}: generating iff dual proper", is_generating(c) == is_proper(d)),
                _check(suite, f"{name}: proper iff dual generating", is_proper(c) == is_generating(d)),
            ]
            failures = []
            for size in range(len(c.ineqs) + 1):
                for subset in combinations(c.ineqs, size):
                    try:
                        dual_face(c, list(subset))
                    except IdentityViolationError as err:
                        failures.append(err)
            results.append(_check(suite, f"{name}: dual faces are exposed by the sum functional", not failures,
                                  witness=failures[0].witness if failures else None))
            return results

        return Task(suite, f"duality {name}", run)

    tasks += [dual_laws(n) for n in APPENDIX_CONES]

    def maximal() -> List[CheckResult]:
        q = get_cone("Q")
        ideals = maximal_ideals(q)
        ok = all(len(basis) == 2 and is_proper(quotient_cone(q, basis)[0]) for basis in ideals)
        return [
            _check(suite, "maximal_ideals(Q) = 4 facet hyperplanes", len(ideals) == 4 and ok, ideals=len(ideals)),
            _check(suite, "maximal_ideals(std2) = 2 axes", len(maximal_ideals(get_cone("std2"))) == 2),
            _check(suite, "maximal_ideals(full2) is empty", maximal_ideals(get_cone("full2")) == []),
        ]

    tasks.append(Task(suite, "maximal ideals", maximal))

    def exposed_examples() -> List[CheckResult]:
        q, std2 = get_cone("Q"), get_cone("std2")
        face = exposed_face(q, (1, 0, 1))
        expected = sorted([(-1, 1, 1), (-1, -1, 1)])
        return [
            _check(suite, "exposed face of Q at (1,0,1)", sorted(face.rays) == expected),
            _check(suite, "exposed face of std2 at (0,1) is the ray e1", exposed_face(std2, (0, 1)).rays == [(1, 0)]),
            _check(suite, "zero functional exposes the whole cone", exposed_face(q, (0, 0, 0)).is_maximal),
        ]

    tasks.append(Task(suite, "exposed faces", exposed_examples))

    # Random quotient pairs
    quotient_cases = []
    for _ in range(QUOTIENT_SAMPLES):
        name = rng.choice(RANDOM_CONES)
        c = get_cone(name)
        choice = rng.random()
        if choice < 0.3 and c.lineality:
            basis = [c.lineality[0]]
        elif choice < 0.6:
            faces = faces_of(name)
            basis = list(faces[rng.randrange(len(faces))].cone().span())
        else:
            basis = [tuple(rng.randint(-1, 1) for _ in range(c.dim))]
        extra = tuple(rng.randint(-1, 1) for _ in range(c.dim))
        quotient_cases.append((name, basis, extra))

    def quotient_batch(batch) -> Task:
        def run() -> List[CheckResult]:
            results = []
            for name, basis, extra in batch:
                c = get_cone(name)
                basis = span_basis(basis, c.dim)
                image, projection = quotient_cone(c, basis)
                report = homomorphism_checks(projection, c, image, basis, span_basis(basis + [extra], c.dim))
                if not report.consistent:
                    results.append(_check(suite, f"quotient checks on {name}", False, detail=str(report),
                                          witness=format_vector(basis[0]) if basis else None))
            results.append(_check(suite, f"quotient bipositive iff inside lineality on {len(batch)} pairs", not results))
            return results

        return Task(suite, "quotients", run)

    for k in range(0, len(quotient_cases), 10):
        tasks.append(quotient_batch(quotient_cases[k:k + 10]))

    def homomorphism_examples() -> List[CheckResult]:
        std2, half, std1 = get_cone("std2"), get_cone("halfplane"), get_cone("std1")
        y_projection = _matrix([[0, 1]], 2)
        on_std2 = homomorphism_checks(y_projection, std2, std1, [(1, 0)])
        on_half = homomorphism_checks(y_projection, half, std1, [(1, 0)])
        trivial = homomorphism_checks(_identity(2), std2, std2, [])
        return [
            _check(suite, "std2 / x-axis is not bipositive", not on_std2.quotient_bipositive and on_std2.consistent),
            _check(suite, "halfplane / lineality is bipositive", on_half.quotient_bipositive and on_half.consistent),
            _check(suite, "quotient by {0} factors the identity", trivial.factors_through and trivial.consistent),
        ]

    tasks.append(Task(suite, "homomorphism examples", homomorphism_examples))
    return tasks


# --- Oracle cross-check ---
ORACLE_CONES = ("std1", "std2", "std3", "ray2", "Q", "Qstar", "halfplane", "zero2", "full2", "pentagon")


def build_oracle(rng: random.Random) -> List[Task]:
    suite = "oracle-crosscheck"
    samples = []
    for _ in range(ORACLE_MEMBERSHIP_SAMPLES):
        name = rng.choice(ORACLE_CONES)
        c = get_cone(name)
        if c.rays and rng.random() < 0.4:
            point = [0] * c.dim
            for r in c.rays:
                weight = rng.randint(-1, 2)
                point = [p + weight * x for p, x in zip(point, r)]
            samples.append((name, tuple(point)))
        else:
            samples.append((name, tuple(rng.randint(-3, 3) for _ in range(c.dim))))

    def membership(batch) -> Task:
        def run() -> List[CheckResult]:
            results = []
            for name, point in batch:
                c = get_cone(name)
                if membership_fm_cone(c, point) != contains(c, point):
                    results.append(_check(suite, f"membership disagreement on {name}", False,
                                          witness=format_vector(point)))
            results.append(_check(suite, f"Fourier-Motzkin agrees with inequalities on {len(batch)} points",
                                  not results))
            return results

        return Task(suite, "membership", run)

    tasks = [membership(samples[k:k + 50]) for k in range(0, len(samples), 50)]

    def extremality(kind: str) -> Task:
        def run() -> List[CheckResult]:
            cone = tensor_of("Q", "Qstar", kind)
            rext = set(extremal_rays(cone))
            candidates = list(cone.rays)
            for a, b in zip(cone.rays, cone.rays[1:]):
                candidates.append(tuple(x + y for x, y in zip(a, b)))
            disagreements = [p for p in candidates if extremality_definitional(cone, p) != (p in rext)]
            label = "min" if kind == PROJECTIVE else "max"
            return [_check(suite, f"extremality oracle agrees on {label}(Q,Qstar)", not disagreements,
                           witness=format_vector(disagreements[0]) if disagreements else None, candidates=len(candidates))]

        return Task(suite, f"extremality {kind}", run)

    tasks += [extremality(PROJECTIVE), extremality(INJECTIVE)]
    return tasks


# --- Mapping properties ---
def build_mapping(rng: random.Random) -> List[Task]:
    suite = "mapping"
    q_rays_map = lambda: _matrix([[r[i] for r in get_cone("Q").rays] for i in range(3)], 4)  # noqa: E731
    q_facets_map = lambda: _matrix(get_cone("Q").ineqs, 3)  # noqa: E731
    qs_facets_map = lambda: _matrix(get_cone("Qstar").ineqs, 3)  # noqa: E731

    def positive_maps() -> List[CheckResult]:
        std4, q, qs = orthant(4), get_cone("Q"), get_cone("Qstar")
        t, s = q_rays_map(), _identity(3)
        kron = kron_map(t, s)
        lower4 = tensor_cone(std4, qs, PROJECTIVE)
        return [
            _check(suite, "T: std4 -> Q is a pushforward", pushforward_check(t, std4, q)),
            _check(suite, "T (x) id is positive min(std4,Qstar) -> min(Q,Qstar)",
                   is_positive_map(kron, lower4, tensor_of("Q", "Qstar", PROJECTIVE))),
            _check(suite, "T (x) id pushes min(std4,Qstar) onto min(Q,Qstar)",
                   pushforward_check(kron, lower4, tensor_of("Q", "Qstar", PROJECTIVE))),
        ]

    def projective_bipositivity() -> List[CheckResult]:
        std4, q, qs = orthant(4), get_cone("Q"), get_cone("Qstar")
        t = q_facets_map()
        kron = kron_map(t, _identity(3))
        lower4 = tensor_cone(std4, qs, PROJECTIVE)
        return [
            _check(suite, "facet embedding Q -> std4 is bipositive", is_bipositive(t, q, std4)),
            _check(suite, "T (x) id is not bipositive for the projective cones",
                   not is_bipositive(kron, tensor_of("Q", "Qstar", PROJECTIVE), lower4)),
            _check(suite, "its preimage is max(Q,Qstar)",
                   is_bipositive(kron, tensor_of("Q", "Qstar", INJECTIVE), lower4)),
        ]

    def injective_pushforward() -> List[CheckResult]:
        std4, qs = orthant(4), get_cone("Qstar")
        kron = kron_map(q_rays_map(), _identity(3))
        upper4 = tensor_cone(std4, qs, INJECTIVE)
        return [
            _check(suite, "T (x) id maps max(std4,Qstar) onto min(Q,Qstar)",
                   pushforward_check(kron, upper4, tensor_of("Q", "Qstar", PROJECTIVE))),
            _check(suite, "T (x) id is not a pushforward for the injective cones",
                   not pushforward_check(kron, upper4, tensor_of("Q", "Qstar", INJECTIVE))),
        ]

    def injective_bipositivity() -> List[CheckResult]:
        std4 = orthant(4)
        kron = kron_map(q_facets_map(), qs_facets_map())
        upper44 = tensor_cone(std4, std4, INJECTIVE)
        return [
            _check(suite, "bipositive (x) bipositive is bipositive for max",
                   is_bipositive(kron, tensor_of("Q", "Qstar", INJECTIVE), upper44)),
        ]

    def retracts() -> List[CheckResult]:
        half = Fraction(1, 2)
        p = _matrix([[half * r * phi for phi in (1, 0, 1)] for r in (1, 1, 1)], 3)
        q = _matrix([[half * r * psi for psi in (1, 1, 1)] for r in (1, 0, 1)], 3)
        axis = _matrix([[1, 0], [0, 0]], 2)
        kron = kron_map(p, q)
        return [
            _check(suite, "rank-one projections are retracts of Q and Qstar",
                   is_order_retract(p, get_cone("Q")) and is_order_retract(q, get_cone("Qstar"))),
            _check(suite, "retract (x) retract is a retract of min(Q,Qstar)",
                   is_order_retract(kron, tensor_of("Q", "Qstar", PROJECTIVE))),
            _check(suite, "retract (x) retract is a retract of max(Q,Qstar)",
                   is_order_retract(kron, tensor_of("Q", "Qstar", INJECTIVE))),
            _check(suite, "axis projection (x) itself is a retract of min(std2,std2)",
                   is_order_retract(kron_map(axis, axis), tensor_of("std2", "std2", PROJECTIVE))),
        ]

    return [
        Task(suite, "positive maps", positive_maps),
        Task(suite, "projective bipositivity", projective_bipositivity),
        Task(suite, "injective pushforward", injective_pushforward),
        Task(suite, "injective bipositivity", injective_bipositivity),
        Task(suite, "retracts", retracts),
    ]


SUITE_BUILDERS: Dict[str, Callable[[random.Random], List[Task]]] = {
    "thmA": build_thm_a,
    "thmB": build_thm_b,
    "thmC": build_thm_c,
    "thmD_faces": build_thm_d,
    "thmE_ideals": build_thm_e,
    "thmF_rays": build_thm_f,
    "rank1": build_rank1,
    "bodies": build_bodies,
    "appendix": build_appendix,
    "oracle-crosscheck": build_oracle,
    "mapping": build_mapping,
}


def resolve_suites(name: str) -> List[str]:
    """Expand ``all`` and aliases into canonical suite names."""
    if name == SUITE_ALL:
        return list(SUITE_NAMES)
    canonical = SUITE_ALIASES.get(name, name)
    if canonical not in SUITE_BUILDERS:
        raise UnknownSuiteError(name, list(SUITE_NAMES) + [SUITE_ALL])
    return [canonical]


class SuiteRunner:
    """Runs verification suites concurrently and collects ordered reports.

    Attributes:
        workers: Thread pool size.
        seed: Seed for every randomized sample.
        progress_callback: Optional callback receiving (current, total, message).
        stop_event: Optional threading event for cancellation.
    """

    def __init__(
        self,
        workers: Optional[int] = None,
        seed: Optional[int] = None,
        progress_callback: Optional[Callable[[int, int, str], None]] = None,
        stop_event: Optional[Event] = None,
    ) -> None:
        config = ConfigManager.load_config()
        self.workers = workers if workers is not None else ConfigManager.workers()
        self.seed = seed if seed is not None else int(config.get("random_seed", 20240601))
        self.progress_callback = progress_callback
        self.stop_event = stop_event

    def build_tasks(self, suite: str) -> List[Task]:
        return SUITE_BUILDERS[suite](random.Random(f"{self.seed}:{suite}"))

    def _execute(self, task: Task) -> List[CheckResult]:
        try:
            outcome = task.run()
        except DoubleDescriptionLimitError:
            raise
        except IdentityViolationError as e:
            return [_check(task.suite, task.name, False, detail=str(e), witness=e.witness)]
        except ConeTensorError as e:
            return [_check(task.suite, task.name, False, detail=f"{type(e).__name__}: {e}")]
        return outcome if isinstance(outcome, list) else [outcome]

    def run_suite(self, suite: str) -> SuiteReport:
        tasks = self.build_tasks(suite)
        total = len(tasks)
        logger.info(f"Running suite {suite} with {total} tasks")
        collected: Dict[int, List[CheckResult]] = {}

        with ThreadPoolExecutor(max_workers=self.workers) as executor:
            future_to_index = {executor.submit(self._execute, task): i for i, task in enumerate(tasks)}
            for done, future in enumerate(as_completed(future_to_index)):
                # Check for cancellation
                if self.stop_event and self.stop_event.is_set():
                    logger.info(f"Cancellation detected while running {suite}")
                    for pending in future_to_index:
                        pending.cancel()
                    raise RunCancelledError()

                index = future_to_index[future]
                collected[index] = future.result()
                if self.progress_callback:
                    self.progress_callback(done + 1, total, f"{suite}: {tasks[index].name}")

        report = SuiteReport(suite=suite, checks=[c for i in sorted(collected) for c in collected[i]])
        level = logging.INFO if report.passed else logging.WARNING
        logger.log(level, f"Suite {suite}: {len(report.checks) - report.failed_count} passed, {report.failed_count} failed")
        return report

    def run(self, name: str) -> List[SuiteReport]:
        return [self.run_suite(suite) for suite in resolve_suites(name)]
