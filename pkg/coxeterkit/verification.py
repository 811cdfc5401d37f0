"""
Acceptance suites.

Every acceptance criterion is a named check registered with a tier. A check
returns ``(passed, detail)``; an exception inside a check counts as a
failure whose detail names the error. ``run_suite`` collects the outcomes in
a pandas DataFrame, one row per check.

Suites:
    fast        checks of the fast tier
    large       every check, the heavy tier included
    acceptance  the suite named by the ``test_tier`` setting
"""

import itertools
import logging
import math
import time
from dataclasses import dataclass
from typing import Callable, List, Tuple

import numpy as np

from .core.config import TEST_TIERS, get_settings
from .core.exceptions import ValidationError

logger = logging.getLogger(__name__)

SUITES = ("fast", "large", "acceptance")

CheckResult = Tuple[bool, str]


@dataclass(frozen=True)
class AcceptanceCheck:
    """A registered acceptance check."""
    name: str
    tier: str
    description: str
    run: Callable[[], CheckResult]


@dataclass(frozen=True)
class CheckOutcome:
    """Result of running one check."""
    name: str
    tier: str
    passed: bool
    detail: str
    seconds: float


CHECK_REGISTRY: List[AcceptanceCheck] = []


def acceptance_check(name: str, description: str, tier: str = "fast"):
    """Register the decorated function as an acceptance check."""
    if tier not in TEST_TIERS:
        raise ValidationError(f"Unknown tier '{tier}'")

    def register(func: Callable[[], CheckResult]) -> Callable[[], CheckResult]:
        CHECK_REGISTRY.append(AcceptanceCheck(name, tier, description, func))
        return func

    return register


def checks_for_suite(suite: str) -> List[AcceptanceCheck]:
    """
    The checks a suite runs, in registration order.

    Raises:
    -------
    ValidationError
        For an unknown suite name.
    """
    if suite not in SUITES:
        raise ValidationError(f"Unknown suite '{suite}'. Choose one of: {', '.join(SUITES)}")
    if suite == "acceptance":
        suite = get_settings().test_tier
    if suite == "large":
        return list(CHECK_REGISTRY)
    return [check for check in CHECK_REGISTRY if check.tier == suite]


def run_check(check: AcceptanceCheck) -> CheckOutcome:
    start = time.perf_counter()
    try:
        passed, detail = check.run()
    except Exception as e:  # pylint: disable=broad-except
        logger.debug("Check %s raised", check.name, exc_info=True)
        passed, detail = False, f"{type(e).__name__}: {e}"
    elapsed = time.perf_counter() - start
    logger.info("%s %s (%.2fs): %s", "PASS" if passed else "FAIL", check.name, elapsed, detail)
    return CheckOutcome(check.name, check.tier, bool(passed), detail, elapsed)


def run_suite(suite: str = "fast"):
    """
    Run a suite and tabulate the outcomes.

    Returns:
    --------
    pandas.DataFrame
        Columns name, tier, passed, detail and seconds.
    """
    import pandas as pd  # pylint: disable=C0415
    checks = checks_for_suite(suite)
    logger.info("Running %d checks of suite '%s'", len(checks), suite)
    outcomes = [run_check(check) for check in checks]
    return pd.DataFrame([vars(o) for o in outcomes],
                        columns=["name", "tier", "passed", "detail", "seconds"])


def _expect(actual, expected) -> CheckResult:
    return actual == expected, f"got {actual}, expected {expected}"


def _all(results: List[Tuple[str, CheckResult]]) -> CheckResult:
    failed = [f"{label}: {detail}" for label, (ok, detail) in results if not ok]
    if failed:
        return False, "; ".join(failed)
    return True, f"{len(results)} cases"


# Checks --------------------------------------------------------------------------
# Imports stay local so registering the suites does not load the constructions.

@acceptance_check("classification", "Gram signatures of every catalog family member")
def check_classification() -> CheckResult:
    # pylint: disable=C0415
    from .diagram import CATALOG_FILES, load_catalog
    from .gram import gram_from_diagram, signature
    expected = {
        "spherical": lambda k: (k, 0, 0),
        "euclidean": lambda k: (k - 1, 0, 1),
        "hyperbolic_compact": lambda k: (k - 1, 1, 0),
        "hyperbolic_noncompact": lambda k: (k - 1, 1, 0),
    }
    wrong, total = [], 0
    for geometry in CATALOG_FILES:
        for entry in load_catalog(geometry):
            for label, diagram in entry.members(max_nodes=6):
                total += 1
                sig = signature(gram_from_diagram(diagram)).as_tuple()
                if sig != expected[geometry](diagram.node_count):
                    wrong.append(f"{label}={sig}")
    if wrong:
        return False, f"{len(wrong)} of {total} wrong: {', '.join(wrong[:5])}"
    return True, f"{total} diagrams"


@acceptance_check("regular catalog", "f-vectors of the regular polytopes up to dimension 4")
def check_regular_catalog() -> CheckResult:
    # pylint: disable=C0415
    from .diagram import from_schlafli
    from .wythoff import build
    results = []
    for symbols, expected in (((3, 3), [4, 6, 4]), ((3, 4), [6, 12, 8]),
                              ((5, 3), [20, 30, 12])):
        results.append((str(symbols), _expect(build(from_schlafli(symbols)).f_vector(), expected)))
    for symbols, vertices, facets in (((3, 4, 3), 24, 24), ((3, 3, 5), 120, 600),
                                      ((5, 3, 3), 600, 120)):
        p = build(from_schlafli(symbols))
        results.append((str(symbols), _expect((p.vertex_count, len(p.facets)), (vertices, facets))))
    return _all(results)


@acceptance_check("dihedral angles", "dihedral angles of the cube, 4-cross, 24-cell and {4,3,5}")
def check_dihedral_angles() -> CheckResult:
    # pylint: disable=C0415
    from .diagram import from_schlafli
    from .wythoff import build, dihedral_angles, tessellation_patch
    results = []
    for symbols, angle in (((4, 3), math.pi / 2), ((3, 3, 4), 2 * math.pi / 3),
                           ((3, 4, 3), 2 * math.pi / 3)):
        values = np.array(list(dihedral_angles(build(from_schlafli(symbols))).values()))
        error = float(np.max(np.abs(values - angle)))
        results.append((str(symbols), (error <= 1e-9, f"max error {error:.2e}")))
    patch = tessellation_patch(from_schlafli((4, 3, 5)), 1)
    values = np.concatenate([list(dihedral_angles(patch.cell_polytope(c)).values())
                             for c in range(len(patch))])
    error = float(np.max(np.abs(values - 2 * math.pi / 5)))
    results.append(("{4,3,5}", (error <= 1e-6, f"max error {error:.2e}")))
    return _all(results)


def _facet_kinds(polytope):
    counts = {}
    for facet in polytope.facets:
        counts[len(facet)] = counts.get(len(facet), 0) + 1
    return counts


@acceptance_check("semiregular", "rectified 4-simplex and 5-demicube facet counts")
def check_semiregular() -> CheckResult:
    # pylint: disable=C0415
    from .diagram import from_schlafli
    from .wythoff import build
    from .zoo import demicube
    rectified = build(from_schlafli((3, 3, 3), "rectified"))
    half_cube = demicube(5)
    return _all([
        ("rectified 4-simplex", _expect((rectified.vertex_count, _facet_kinds(rectified)),
                                        (10, {4: 5, 6: 5}))),
        ("5-demicube", _expect((half_cube.vertex_count, _facet_kinds(half_cube)),
                               (16, {5: 16, 8: 10}))),
    ])


@acceptance_check("gosset", "4_21 vertices and facet types", tier="large")
def check_gosset() -> CheckResult:
    from .zoo import build_421  # pylint: disable=C0415
    polytope = build_421()
    return _expect((polytope.vertex_count, _facet_kinds(polytope)),
                   (240, {8: 17280, 14: 2160}))


@acceptance_check("group orders", "orders of A3, B3, H3 and H4")
def check_group_orders() -> CheckResult:
    # pylint: disable=C0415
    from .diagram import from_schlafli
    from .wythoff import group_order
    return _all([(str(symbols), _expect(group_order(from_schlafli(symbols)), order))
                 for symbols, order in (((3, 3), 24), ((4, 3), 48), ((5, 3), 120),
                                        ((5, 3, 3), 14400))])


@acceptance_check("omnitruncated 120-cell", "14400 vertices", tier="large")
def check_omnitruncated_h4() -> CheckResult:
    # pylint: disable=C0415
    from .diagram import from_schlafli
    from .wythoff import build, predicted_face_counts
    diagram = from_schlafli((5, 3, 3), "omnitruncated")
    polytope = build(diagram)
    predicted = predicted_face_counts(diagram)
    return _expect((polytope.vertex_count, polytope.f_vector()),
                   (14400, [predicted[h] for h in range(4)]))


@acceptance_check("e8", "E8 roots, basis Gram and hole neighbors")
def check_e8() -> CheckResult:
    # pylint: disable=C0415
    from .zoo import E8_GRAM, e8_gram, e8_roots, hole_neighbors
    roots = e8_roots()
    norms = np.linalg.norm(roots, axis=1)
    deep = hole_neighbors(np.eye(8)[0])
    shallow = hole_neighbors(np.array([5.0] + [1.0] * 7) / 6)
    return _all([
        ("roots", _expect((len(roots), bool(np.allclose(norms, math.sqrt(2), atol=1e-12))),
                          (240, True))),
        ("gram", _expect(bool(np.array_equal(e8_gram(), E8_GRAM)), True)),
        ("deep hole", ((deep.count, abs(deep.distance - 1.0) <= 1e-12) == (16, True),
                       f"{deep.count} at {deep.distance!r}")),
        ("shallow hole", ((shallow.count,
                           abs(shallow.distance - 2 * math.sqrt(2) / 3) <= 1e-12) == (9, True),
                          f"{shallow.count} at {shallow.distance!r}")),
    ])


@acceptance_check("quaternions", "binary groups, 600-cell and snub 24-cell")
def check_quaternions() -> CheckResult:
    # pylint: disable=C0415
    from .zoo import binary_icosahedral, binary_tetrahedral, quaternion_polytopes
    polytopes = quaternion_polytopes(("600-cell", "snub 24-cell"))
    cell600 = polytopes["600-cell"]
    valences = set(cell600.valences().tolist())
    return _all([
        ("T*24", _expect(binary_tetrahedral().order, 24)),
        ("I*120", _expect(binary_icosahedral().order, 120)),
        ("600-cell", _expect((len(cell600.facets), valences), (600, {12}))),
        ("snub 24-cell", _expect(polytopes["snub 24-cell"].vertex_count, 96)),
    ])


@acceptance_check("low dimensions", "triangle and tetrahedron criteria against Gram signatures")
def check_low_dimensions() -> CheckResult:
    # pylint: disable=C0415
    from .gram import signature
    from .lowdim import (LowDimGeometry, tetrahedron_geometry, tetrahedron_gram,
                         triangle_geometry, triangle_gram)

    def by_signature(G):
        sig = signature(G)
        if sig.negative == 0:
            return LowDimGeometry.SPHERICAL if sig.zero == 0 else LowDimGeometry.EUCLIDEAN
        return LowDimGeometry.HYPERBOLIC

    disagreements, cases = [], 0
    for marks in itertools.combinations_with_replacement(range(2, 11), 3):
        angles = [math.pi / m for m in marks]
        cases += 1
        if triangle_geometry(*angles) is not by_signature(triangle_gram(*angles)):
            disagreements.append(f"triangle {marks}")
    for marks in itertools.product(range(2, 7), repeat=6):
        angles = [math.pi / m for m in marks]
        try:
            result = tetrahedron_geometry(angles)
        except ValidationError:
            continue
        cases += 1
        if result.geometry is not by_signature(tetrahedron_gram(angles)):
            disagreements.append(f"tetrahedron {marks}")
    ideal = tetrahedron_geometry([math.pi / 3] * 6).ideal_vertices
    if disagreements:
        return False, f"{len(disagreements)} disagreements: {', '.join(disagreements[:5])}"
    return _expect((cases > 0, ideal), (True, (1, 2, 3, 4)))


@acceptance_check("andreev", "right-angled dodecahedron and single-vertex violations")
def check_andreev() -> CheckResult:
    # pylint: disable=C0415
    from .diagram import from_schlafli
    from .lowdim import PlanarPolyhedronGraph, andreev_check
    from .wythoff import build
    graph = PlanarPolyhedronGraph.from_polytope(build(from_schlafli((5, 3))))
    results = [("right angles", _expect(andreev_check(graph, graph.uniform_angles(math.pi / 2))
                                        .realizable, True))]
    for vertex in graph.vertices:
        angles = graph.uniform_angles(math.pi / 2)
        for key, angle in zip(graph.vertex_angle_keys(vertex),
                              (math.pi / 3, math.pi / 3, math.pi / 4)):
            angles[key] = angle
        result = andreev_check(graph, angles)
        results.append((f"vertex {vertex}", _expect((result.condition, result.witness),
                                                    (1, (vertex,)))))
    return _all(results)


@acceptance_check("right-angled duals", "dual of the rectified 4-simplex in H^4")
def check_right_angled_dual() -> CheckResult:
    # pylint: disable=C0415
    from .diagram import from_schlafli
    from .dual import dual_polytope, hyperbolic_realization
    from .wythoff import build
    realization = hyperbolic_realization(dual_polytope(build(from_schlafli((3, 3, 3),
                                                                            "rectified"))))
    return _expect((len(realization.ideal), len(realization.real),
                    realization.is_right_angled(1e-6)), (5, 5, True))


@acceptance_check("demicube dual", "dual of the 5-demicube in H^5", tier="large")
def check_demicube_dual() -> CheckResult:
    # pylint: disable=C0415
    from .diagram import CoxeterDiagram
    from .dual import dual_polytope, hyperbolic_realization
    from .wythoff import build
    # D5 ringed at a fork leaf, centered at the origin.
    d5 = CoxeterDiagram(5, {(1, 2): 3, (2, 3): 3, (3, 4): 3, (3, 5): 3}, frozenset({5}))
    realization = hyperbolic_realization(dual_polytope(build(d5)))
    return _expect((len(realization.ideal), len(realization.real),
                    realization.is_right_angled(1e-6)), (10, 16, True))


@acceptance_check("properties", "reflections, Coxeter relations, Euler identity and duality")
def check_properties() -> CheckResult:
    # pylint: disable=C0415
    from .diagram import CATALOG_FILES, from_schlafli, load_catalog
    from .dual import dual_polytope
    from .forms import Isometry
    from .gram import gram_from_diagram, recover_normals
    from .wythoff import build, coxeter_relations, orbit_closure, seed_point

    worst_reflection = worst_relation = 0.0
    for geometry in CATALOG_FILES:
        for entry in load_catalog(geometry):
            for _, diagram in entry.members(max_nodes=5):
                mirrors = recover_normals(gram_from_diagram(diagram))
                for r in mirrors.reflections():
                    identity = Isometry.identity(r.dim)
                    worst_reflection = max(worst_reflection,
                                           r.compose(r).deviation(identity),
                                           r.form_defect(mirrors.form))
                worst_relation = max([worst_relation,
                                      *coxeter_relations(mirrors, diagram).values()])
    results = [("reflections", (worst_reflection <= 1e-10, f"{worst_reflection:.2e}")),
               ("relations", (worst_relation <= 1e-8, f"{worst_relation:.2e}"))]

    for symbols in ((3, 3), (4, 3), (5, 3), (3, 3, 3), (4, 3, 3)):
        k = len(symbols) + 1
        for rings in itertools.chain.from_iterable(
                itertools.combinations(range(1, k + 1), size) for size in range(1, k + 1)):
            p = build(from_schlafli(symbols, rings))
            lengths = p.edge_lengths()
            uniform = float(np.ptp(lengths)) <= 1e-8
            results.append((f"{symbols}{rings}", _expect(
                (p.euler_characteristic(), uniform), (1 - (-1) ** p.rank, True))))

    primal = build(from_schlafli((3, 4), (2,)))
    dual = dual_polytope(primal)
    twice = dual_polytope(dual.polytope).polytope
    results.append(("dual reversal", _expect(dual.f_vector(), primal.f_vector()[::-1])))
    results.append(("double dual", _expect(
        (twice.f_vector(), bool(np.allclose(twice.vertices, primal.vertices, atol=1e-9))),
        (primal.f_vector(), True))))

    mirrors = recover_normals(gram_from_diagram(from_schlafli((5, 3))))
    seed = seed_point(mirrors, [1, 2]).coords
    generators = mirrors.reflections()
    expected = orbit_closure(seed, generators)
    stable = all(np.allclose(orbit_closure(seed, [generators[i] for i in perm]), expected,
                             atol=1e-12)
                 for perm in itertools.permutations(range(len(generators))))
    results.append(("orbit determinism", _expect(stable, True)))
    return _all(results)
