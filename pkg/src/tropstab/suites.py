"""Reusable property-check runners behind the verify command and the
acceptance tests.

Each runner returns a report dictionary: the suite name, the full
parameter set including the seed, one entry per check with a case count,
and, for a failing check, a counterexample echoing the inputs.  Reports
are deterministic functions of their parameters.
"""

from __future__ import annotations

import itertools
import random
from fractions import Fraction

from . import sampling
from .apartment import (ApartmentPoint, face_address, normalizer_action,
                        parahoric_oracle, stabilizer_membership)
from .compactification import (BoundaryPoint, FanDirection,
                               boundary_block_oracle, boundary_point_from_direction,
                               boundary_stabilizes, direction_for_stratum,
                               permute_boundary, sp_boundary_stabilizes)
from .fields import FieldSpec
from .matrices import FieldMatrix
from .serialize import (matrix_to_json, point_to_json, spec_to_json)
from .symplectic import (SpApartmentPoint, sp_normalizer_action,
                         sp_parahoric_oracle, sp_stabilizer_membership)
from .tropical import (NEG_INF, stabilizes_tropically, trop_add, trop_matvec,
                       trop_mul, tropicalize, valuation_inequality_oracle)
from .weights import (WeightedCharacter, dominance_cone,
                      dominant_weight, normal_cone_member, partitions_of,
                      polytope_vertices, schur_eval_bialternant,
                      schur_eval_tableaux, skeleton_member,
                      sl_identity_character, sl_partition_character,
                      sp_standard_character, tropical_hypersurface_member,
                      weight_fan, weyl_cone, weyl_elements)


def _check(name, ok, cases, witness=None):
    return {"name": name, "pass": bool(ok), "cases": cases,
            "counterexample": witness}


def _report(suite, params, checks):
    return {"suite": suite, "params": params, "checks": checks,
            "pass": all(c["pass"] for c in checks)}


def _trop_scalar_samples(rng, count):
    out = []
    for _ in range(count):
        if rng.random() < 0.25:
            out.append(NEG_INF)
        else:
            out.append(sampling.random_fraction(rng))
    return out


# ----------------------------------------------------------------------
# semiring laws and the failure of composition

def composition_example_matrices(spec: FieldSpec):
    """The pair of determinant-one matrices whose tropicalized actions do
    not compose: unipotent upper and lower triangular with a sign."""
    g = FieldMatrix(spec, [[1, 1], [0, 1]])
    h = FieldMatrix(spec, [[1, 0], [-1, 1]])
    return g, h


def run_semiring(seed: int, count: int = 200, spec: FieldSpec | None = None):
    spec = spec or FieldSpec("Qp", 2)
    rng = random.Random(seed)
    checks = []

    scalars = _trop_scalar_samples(rng, 3 * count)
    triples = [tuple(scalars[3 * i:3 * i + 3]) for i in range(count)]
    laws = [
        ("add_commutative", lambda a, b, c: trop_add(a, b) == trop_add(b, a)),
        ("add_associative", lambda a, b, c:
            trop_add(trop_add(a, b), c) == trop_add(a, trop_add(b, c))),
        ("add_idempotent", lambda a, b, c: trop_add(a, a) == a),
        ("mul_commutative", lambda a, b, c: trop_mul(a, b) == trop_mul(b, a)),
        ("mul_associative", lambda a, b, c:
            trop_mul(trop_mul(a, b), c) == trop_mul(a, trop_mul(b, c))),
        ("distributive", lambda a, b, c:
            trop_mul(a, trop_add(b, c)) == trop_add(trop_mul(a, b), trop_mul(a, c))),
        ("neutral_elements", lambda a, b, c:
            trop_add(a, NEG_INF) == a and trop_mul(a, 0) == a),
        ("absorbing_bottom", lambda a, b, c: trop_mul(a, NEG_INF) is NEG_INF),
    ]
    for name, law in laws:
        bad = next((t for t in triples if not law(*t)), None)
        checks.append(_check(name, bad is None, len(triples),
                             None if bad is None else {"scalars": point_to_json(bad)}))

    hom_bad = None
    hom_cases = 0
    for _ in range(count // 2):
        n = rng.choice((2, 3))
        m = tropicalize(sampling.random_sl(spec, n, rng, 4))
        x = sampling.random_point(rng, n)
        a = sampling.random_fraction(rng)
        shifted = tuple(a + c for c in x)
        lhs = trop_matvec(m, shifted)
        rhs = tuple(trop_mul(a, y) for y in trop_matvec(m, x))
        hom_cases += 1
        if lhs != rhs:
            hom_bad = {"matrix": [[str(e) for e in row] for row in m],
                       "point": point_to_json(x), "scalar": str(a)}
            break
    checks.append(_check("matvec_homogeneity", hom_bad is None, hom_cases, hom_bad))

    g, h = composition_example_matrices(spec)
    gh = g * h
    grid = [Fraction(k, 2) for k in range(-2, 3)]
    grid_bad = None
    for x1 in grid:
        for x2 in grid:
            x = (x1, x2)
            product = trop_matvec(tropicalize(gh), x)
            composed = trop_matvec(tropicalize(g), trop_matvec(tropicalize(h), x))
            want_product = (x2, max(x1, x2))
            want_composed = (max(x1, x2), max(x1, x2))
            if product != want_product or composed != want_composed:
                grid_bad = {"point": point_to_json(x),
                            "product": point_to_json(product),
                            "composed": point_to_json(composed)}
                break
        if grid_bad:
            break
    checks.append(_check("composition_formulas_on_grid", grid_bad is None,
                         len(grid) ** 2, grid_bad))

    witness = (Fraction(1), Fraction(0))
    product = trop_matvec(tropicalize(gh), witness)
    composed = trop_matvec(tropicalize(g), trop_matvec(tropicalize(h), witness))
    ok = product == (Fraction(0), Fraction(1)) and composed == (Fraction(1), Fraction(1))
    checks.append(_check("composition_differs_at_witness", ok and product != composed, 1,
                         None if ok else {"product": point_to_json(product),
                                          "composed": point_to_json(composed)}))

    return _report("semiring", {"seed": seed, "count": count,
                                "field": spec_to_json(spec)}, checks)


# ----------------------------------------------------------------------
# stabilizer predicates: oracle equivalence and group closure

def run_stabilizer(spec: FieldSpec, n: int, seed: int, matrices: int = 500,
                   points: int = 20, closure_pairs: int = 200):
    rng = random.Random(seed)
    checks = []

    bad = None
    cases = 0
    for _ in range(matrices):
        g = sampling.random_sl(spec, n, rng)
        for _ in range(points):
            x = sampling.random_point(rng, n)
            cases += 1
            direct = stabilizes_tropically(g, x)
            oracle = valuation_inequality_oracle(g, x)
            if direct != oracle:
                bad = {"matrix": matrix_to_json(g), "point": point_to_json(x),
                       "fixed_point_test": direct, "inequality_test": oracle}
                break
        if bad:
            break
    if matrices:
        checks.append(_check("oracle_equivalence", bad is None, cases, bad))

    closure_bad = None
    closure_cases = 0
    for _ in range(closure_pairs):
        if rng.random() < 0.5:
            x = tuple(Fraction(rng.randint(-2, 2)) for _ in range(n))
        else:
            x = tuple(Fraction(rng.randint(-4, 4), rng.choice((1, 2, 3, 4)))
                      for _ in range(n))
        g = sampling.random_stabilizing(spec, x, rng)
        h = sampling.random_stabilizing(spec, x, rng)
        closure_cases += 1
        if not (stabilizes_tropically(g, x) and stabilizes_tropically(h, x)):
            closure_bad = {"reason": "generator does not stabilize",
                           "matrix": matrix_to_json(g), "point": point_to_json(x)}
            break
        if not stabilizes_tropically(g * h, x) or \
                not stabilizes_tropically(g.inverse(), x):
            closure_bad = {"g": matrix_to_json(g), "h": matrix_to_json(h),
                           "point": point_to_json(x)}
            break
    if closure_pairs:
        checks.append(_check("group_closure", closure_bad is None,
                             closure_cases, closure_bad))

    return _report("stabilizer",
                   {"seed": seed, "n": n, "field": spec_to_json(spec),
                    "matrices": matrices, "points": points,
                    "closure_pairs": closure_pairs}, checks)


# ----------------------------------------------------------------------
# parahoric membership on the star of the origin

def ordered_set_partitions(items):
    items = tuple(items)
    if not items:
        yield ()
        return
    for k in range(1, len(items) + 1):
        for block in itertools.combinations(items, k):
            rest = tuple(x for x in items if x not in block)
            for tail in ordered_set_partitions(rest):
                yield (block,) + tail


def face_point(blocks, n: int, spread: Fraction | None = None) -> ApartmentPoint:
    """A point in the relative interior of the face given by ordered blocks."""
    r = len(blocks)
    spread = spread if spread is not None else Fraction(1, 2 * r)
    coords = [Fraction(0)] * n
    for idx, block in enumerate(blocks):
        for i in block:
            coords[i] = (r - 1 - idx) * spread
    return ApartmentPoint(coords)


def run_parahoric(spec: FieldSpec, n: int, seed: int, count: int = 200):
    rng = random.Random(seed)
    checks = []

    bad = None
    cases = 0
    faces = list(ordered_set_partitions(range(n)))
    for blocks in faces:
        x = face_point(blocks, n)
        for integral in (True, False):
            for _ in range(count):
                g = (sampling.random_sl_integral(spec, n, rng) if integral
                     else sampling.random_sl_nonintegral(spec, n, rng))
                cases += 1
                if parahoric_oracle(g, x) != stabilizer_membership(g, x):
                    bad = {"blocks": [list(b) for b in blocks],
                           "point": point_to_json(x.coords),
                           "matrix": matrix_to_json(g)}
                    break
            if bad:
                break
        if bad:
            break
    checks.append(_check("parahoric_equals_stabilizer", bad is None, cases, bad))

    if n == 2:
        iw_bad = None
        iw_cases = 0
        x = ApartmentPoint((Fraction(1, 4), Fraction(-1, 4)))
        for _ in range(4 * count):
            g = sampling.random_sl(spec, 2, rng, 4)
            iw_cases += 1
            explicit = (g.rows[0][0].valuation() >= 0
                        and g.rows[0][1].valuation() >= 0
                        and g.rows[1][1].valuation() >= 0
                        and g.rows[1][0].valuation() >= 1)
            if stabilizer_membership(g, x) != explicit:
                iw_bad = {"matrix": matrix_to_json(g)}
                break
        checks.append(_check("iwahori_valuation_pattern", iw_bad is None,
                             iw_cases, iw_bad))

    eq_bad = None
    eq_cases = 0
    for _ in range(count):
        g = sampling.random_sl(spec, n, rng, 4)
        mono = sampling.random_monomial(spec, n, rng)
        x = ApartmentPoint(sampling.random_point(rng, n))
        m = mono.to_matrix()
        eq_cases += 1
        if stabilizer_membership(g, x) != \
                stabilizer_membership(m * g * m.inverse(), normalizer_action(mono, x)):
            eq_bad = {"matrix": matrix_to_json(g), "monomial": matrix_to_json(m),
                      "point": point_to_json(x.coords)}
            break
    checks.append(_check("normalizer_equivariance", eq_bad is None, eq_cases, eq_bad))

    fa_bad = None
    fa_cases = 0
    for blocks in faces:
        a = face_point(blocks, n)
        b = face_point(blocks, n, spread=Fraction(1, 3 * len(blocks)))
        if face_address(a) != face_address(b):
            fa_bad = {"blocks": [list(bl) for bl in blocks],
                      "reason": "representatives have different addresses"}
            break
        for _ in range(count // 4):
            g = sampling.random_sl(spec, n, rng, 4)
            fa_cases += 1
            if stabilizer_membership(g, a) != stabilizer_membership(g, b):
                fa_bad = {"matrix": matrix_to_json(g),
                          "first": point_to_json(a.coords),
                          "second": point_to_json(b.coords)}
                break
        if fa_bad:
            break
    checks.append(_check("face_address_constancy", fa_bad is None, fa_cases, fa_bad))

    return _report("parahoric",
                   {"seed": seed, "n": n, "field": spec_to_json(spec),
                    "count": count}, checks)


# ----------------------------------------------------------------------
# symplectic stabilizers

def run_sp(spec: FieldSpec, n: int, seed: int, count: int = 300):
    rng = random.Random(seed)
    checks = []
    origin = SpApartmentPoint((0,) * n)

    bad = None
    for _ in range(count):
        g = sampling.random_sp(spec, n, rng)
        if sp_stabilizer_membership(g, origin) != g.is_integral():
            bad = {"matrix": matrix_to_json(g)}
            break
    checks.append(_check("origin_stabilizer_is_integral", bad is None, count, bad))

    cl_bad = None
    for _ in range(count // 2):
        x = SpApartmentPoint(tuple(Fraction(rng.randint(-2, 2)) for _ in range(n)))
        t = sampling.sp_torus(spec, n, [spec.uniformizer() ** -int(c)
                                        for c in x.coords])
        g = t * sampling.random_sp_integral(spec, n, rng) * t.inverse()
        h = t * sampling.random_sp_integral(spec, n, rng) * t.inverse()
        if not (sp_stabilizer_membership(g, x) and sp_stabilizer_membership(h, x)):
            cl_bad = {"reason": "generator does not stabilize",
                      "matrix": matrix_to_json(g),
                      "point": point_to_json(x.coords)}
            break
        if not sp_stabilizer_membership(g * h, x) or \
                not sp_stabilizer_membership(g.inverse(), x):
            cl_bad = {"g": matrix_to_json(g), "h": matrix_to_json(h),
                      "point": point_to_json(x.coords)}
            break
    checks.append(_check("group_closure", cl_bad is None, count // 2, cl_bad))

    eq_bad = None
    for _ in range(count // 2):
        g = sampling.random_sp(spec, n, rng)
        w = sampling.random_sp_monomial(spec, n, rng)
        x = SpApartmentPoint(sampling.random_point(rng, n))
        if sp_stabilizer_membership(g, x) != \
                sp_stabilizer_membership(w * g * w.inverse(),
                                         sp_normalizer_action(w, x)):
            eq_bad = {"matrix": matrix_to_json(g), "monomial": matrix_to_json(w),
                      "point": point_to_json(x.coords)}
            break
    checks.append(_check("weyl_equivariance", eq_bad is None, count // 2, eq_bad))

    star_bad = None
    for _ in range(count // 2):
        g = sampling.random_sp(spec, n, rng)
        x = SpApartmentPoint(tuple(Fraction(rng.randint(-3, 3), 8)
                                   for _ in range(n)))
        if sp_parahoric_oracle(g, x) != sp_stabilizer_membership(g, x):
            star_bad = {"matrix": matrix_to_json(g),
                        "point": point_to_json(x.coords)}
            break
    checks.append(_check("parahoric_equals_stabilizer", star_bad is None,
                         count // 2, star_bad))

    if n == 1:
        sl_bad = None
        for _ in range(count):
            g = sampling.random_sp(spec, 1, rng)
            c = sampling.random_fraction(rng)
            sp_side = sp_stabilizer_membership(g, SpApartmentPoint((c,)))
            sl_side = stabilizer_membership(g, ApartmentPoint((c, -c)))
            if sp_side != sl_side:
                sl_bad = {"matrix": matrix_to_json(g), "coordinate": str(c)}
                break
        checks.append(_check("rank_one_matches_special_linear", sl_bad is None,
                             count, sl_bad))

    return _report("sp", {"seed": seed, "n": n, "field": spec_to_json(spec),
                          "count": count}, checks)


# ----------------------------------------------------------------------
# fans, polytope vertices, hypersurface

def character_from_params(rep: str, n: int | None = None, lam=None) -> WeightedCharacter:
    if rep == "identity":
        return sl_identity_character(n)
    if rep == "sp":
        return sp_standard_character(n)
    if rep == "schur":
        lam = tuple(lam)
        return sl_partition_character(lam, n if n else len(lam))
    raise ValueError(f"unknown representation tag {rep!r}")


def _sample_coords(rng, rank):
    return tuple(Fraction(rng.randint(-12, 12), rng.choice((1, 2, 3, 4)))
                 for _ in range(rank))


def run_fans(rep: str, seed: int, n: int | None = None, lam=None,
             samples: int = 2000, expected_cones: int | None = None):
    char = character_from_params(rep, n, lam)
    rng = random.Random(seed)
    checks = []
    fan = weight_fan(char)

    orbit = frozenset(w.apply(dominant_weight(char))
                      for w in weyl_elements(char.group, char.rank))
    verts = polytope_vertices(char)
    checks.append(_check(
        "vertices_equal_weyl_orbit", verts == orbit, len(char.weights),
        None if verts == orbit else {"vertices": sorted(map(list, verts)),
                                     "orbit": sorted(map(list, orbit))}))

    if expected_cones is not None:
        ok = len(fan) == expected_cones
        checks.append(_check("maximal_cone_count", ok, 1,
                             None if ok else {"expected": expected_cones,
                                              "got": len(fan)}))

    mem_bad = None
    cover_bad = None
    mem_cases = 0
    for _ in range(samples):
        x = _sample_coords(rng, char.rank)
        hits = 0
        for fc in fan.maximal_cones:
            mem_cases += 1
            by_cone = fc.cone.contains(x)
            by_vertex = normal_cone_member(char, fc.vertex, x)
            if by_cone != by_vertex:
                mem_bad = {"point": point_to_json(x), "vertex": list(fc.vertex),
                           "h_representation": by_cone, "normal_cone": by_vertex}
                break
            hits += by_cone
        if mem_bad:
            break
        if hits == 0:
            cover_bad = {"point": point_to_json(x)}
            break
    checks.append(_check("cone_membership_equivalence", mem_bad is None,
                         mem_cases, mem_bad))
    checks.append(_check("fan_covers_samples", cover_bad is None,
                         samples, cover_bad))

    weyl_bad = None
    weyl_cases = 0
    probes = [_sample_coords(rng, char.rank) for _ in range(min(samples, 200))]
    for w in weyl_elements(char.group, char.rank):
        chamber = weyl_cone(char.group, char.rank, w)
        big = dominance_cone(char, w)
        for x in probes:
            weyl_cases += 1
            if chamber.contains(x) and not big.contains(x):
                weyl_bad = {"point": point_to_json(x),
                            "weyl": [list(f) for f in chamber.functionals]}
                break
        if weyl_bad:
            break
    checks.append(_check("weyl_cone_containment", weyl_bad is None,
                         weyl_cases, weyl_bad))

    params = {"seed": seed, "rep": rep, "samples": samples}
    if n is not None:
        params["n"] = n
    if lam is not None:
        params["lambda"] = list(lam)
    return _report("fans", params, checks)


def run_hypersurface(rep: str, p: int, seed: int, n: int | None = None,
                     lam=None, samples: int = 2000):
    char = character_from_params(rep, n, lam)
    rng = random.Random(seed)
    fan = weight_fan(char)
    bad = None
    for _ in range(samples):
        x = _sample_coords(rng, char.rank)
        hyper = tropical_hypersurface_member(char, p, x)
        skel = skeleton_member(fan, x)
        if hyper != skel:
            bad = {"point": point_to_json(x), "hypersurface": hyper,
                   "skeleton": skel}
            break
    checks = [_check("hypersurface_equals_skeleton", bad is None, samples, bad)]
    params = {"seed": seed, "rep": rep, "p": p, "samples": samples}
    if n is not None:
        params["n"] = n
    if lam is not None:
        params["lambda"] = list(lam)
    return _report("hypersurface", params, checks)


# ----------------------------------------------------------------------
# Schur evaluations

def _distinct_values(rng, n):
    pool = sorted({Fraction(num, den) for num in range(-9, 10) for den in (1, 2, 3)
                   if num != 0})
    return tuple(rng.sample(pool, n))


def run_schur(seed: int, inputs: int = 50, max_size: int = 6, max_rank: int = 4,
              linear_inputs: int = 100):
    rng = random.Random(seed)
    checks = []

    lin_bad = None
    for _ in range(linear_inputs):
        rank = rng.randint(2, max_rank + 1)
        z = _distinct_values(rng, rank)
        expect = sum(z, Fraction(0))
        if schur_eval_tableaux((1,), z) != expect or \
                schur_eval_bialternant((1,), z) != expect:
            lin_bad = {"values": point_to_json(z)}
            break
    checks.append(_check("linear_schur_is_coordinate_sum", lin_bad is None,
                         linear_inputs, lin_bad))

    route_bad = None
    cases = 0
    for rank in range(1, max_rank + 1):
        for size in range(1, max_size + 1):
            for lam in partitions_of(size, max_parts=rank):
                for _ in range(inputs):
                    z = _distinct_values(rng, rank)
                    cases += 1
                    if schur_eval_tableaux(lam, z) != schur_eval_bialternant(lam, z):
                        route_bad = {"partition": list(lam),
                                     "values": point_to_json(z)}
                        break
                if route_bad:
                    break
            if route_bad:
                break
        if route_bad:
            break
    checks.append(_check("tableaux_equal_bialternant", route_bad is None,
                         cases, route_bad))

    return _report("schur", {"seed": seed, "inputs": inputs,
                             "max_size": max_size, "max_rank": max_rank}, checks)


# ----------------------------------------------------------------------
# boundary stabilizers

def _valuation_scale(g) -> int:
    worst = 0
    for row in g.rows:
        for e in row:
            if not e.is_zero():
                worst = max(worst, abs(e.valuation()))
    return worst


def _capped(sampler, cap):
    """Resample until every finite entry valuation is within the cap.

    The limit-coherence checks probe a finite stretch of a ray; an entry
    whose constraint grows along the ray evades them exactly when its
    valuation exceeds the probed horizon, so the generic samples must stay
    below it."""
    while True:
        g = sampler()
        if _valuation_scale(g) <= cap:
            return g


def _random_boundary_point(rng, n, stratum_set):
    coords = [NEG_INF] * n
    for i in stratum_set:
        coords[i] = Fraction(rng.randint(-4, 4), rng.choice((1, 2, 3)))
    return BoundaryPoint(coords)


def run_boundary(spec: FieldSpec, n: int, seed: int, count: int = 300):
    rng = random.Random(seed)
    checks = []

    bad = None
    cases = 0
    strata = []
    for size in range(1, n + 1):
        strata.extend(itertools.combinations(range(n), size))
    for stratum_set in strata:
        for _ in range(count):
            b = _random_boundary_point(rng, n, stratum_set)
            if rng.random() < 0.5:
                g = sampling.random_block_triangular(spec, n, stratum_set, rng)
            else:
                g = sampling.random_sl(spec, n, rng, 4)
            cases += 1
            direct = boundary_stabilizes(g, b)
            blocked = boundary_block_oracle(g, b)
            if direct != blocked:
                bad = {"matrix": matrix_to_json(g),
                       "point": point_to_json(b.coords),
                       "tropical": direct, "block": blocked}
                break
        if bad:
            break
    checks.append(_check("block_oracle_equivalence", bad is None, cases, bad))

    full_bad = None
    for _ in range(count):
        x = sampling.random_point(rng, n)
        b = BoundaryPoint(x)
        g = sampling.random_sl(spec, n, rng, 4)
        if boundary_stabilizes(g, b) != stabilizes_tropically(g, x):
            full_bad = {"matrix": matrix_to_json(g), "point": point_to_json(x)}
            break
    checks.append(_check("full_stratum_consistency", full_bad is None,
                         count, full_bad))

    eq_bad = None
    for _ in range(count // 2):
        stratum_set = rng.choice(strata)
        b = _random_boundary_point(rng, n, stratum_set)
        mono = sampling.random_monomial(spec, n, rng)
        if rng.random() < 0.5:
            g = sampling.random_block_triangular(spec, n, stratum_set, rng)
        else:
            g = sampling.random_sl(spec, n, rng, 4)
        m = mono.to_matrix()
        if boundary_stabilizes(g, b) != \
                boundary_stabilizes(m * g * m.inverse(),
                                    permute_boundary(b, mono.perm)):
            eq_bad = {"matrix": matrix_to_json(g), "monomial": matrix_to_json(m),
                      "point": point_to_json(b.coords)}
            break
    checks.append(_check("monomial_equivariance", eq_bad is None,
                         count // 2, eq_bad))

    lim_bad = None
    lim_nonvacuous = 0
    steps = 10
    for k in range(count // 2):
        stratum_set = rng.choice(strata)
        d = direction_for_stratum(stratum_set, n)
        x = ApartmentPoint(tuple(Fraction(rng.randint(-2, 2)) for _ in range(n)))
        if k % 2 == 0:
            g = sampling.random_ray_stabilizing(spec, x.coords, d.point, rng)
        else:
            g = _capped(lambda: sampling.random_sl(spec, n, rng, 4), cap=5)
        along = all(
            stabilizes_tropically(
                g, tuple(c + s * v for c, v in zip(x.coords, d.point)))
            for s in range(steps + 1))
        if along:
            lim_nonvacuous += 1
            b = boundary_point_from_direction(x, d)
            if not boundary_stabilizes(g, b):
                lim_bad = {"matrix": matrix_to_json(g),
                           "point": point_to_json(x.coords),
                           "direction": point_to_json(d.point)}
                break
    checks.append(_check("limit_coherence", lim_bad is None and lim_nonvacuous > 0,
                         lim_nonvacuous, lim_bad))

    return _report("boundary", {"seed": seed, "n": n,
                                "field": spec_to_json(spec), "count": count},
                   checks)


def sp4_fan_directions():
    """The trivial direction, the four maximal-cone interiors, and the four
    rays of the rank-two symplectic fan."""
    char = sp_standard_character(2)
    fan = weight_fan(char)

    def containing_cone(c):
        for fc in fan.maximal_cones:
            if fc.cone.contains(c):
                return fc.cone
        raise ValueError("fan does not cover the direction")

    points = [(Fraction(0), Fraction(0))]
    points += [(Fraction(1), Fraction(0)), (Fraction(0), Fraction(1)),
               (Fraction(-1), Fraction(0)), (Fraction(0), Fraction(-1))]
    points += [(Fraction(1), Fraction(1)), (Fraction(1), Fraction(-1)),
               (Fraction(-1), Fraction(1)), (Fraction(-1), Fraction(-1))]
    return [FanDirection(containing_cone(c), c) for c in points]


def run_sp_boundary(spec: FieldSpec, seed: int, count: int = 200):
    n = 2
    rng = random.Random(seed)
    checks = []
    directions = sp4_fan_directions()
    steps = 10

    triv_bad = None
    trivial = directions[0]
    for _ in range(count):
        g = sampling.random_sp(spec, n, rng)
        x = SpApartmentPoint(sampling.random_point(rng, n))
        if sp_boundary_stabilizes(g, x, trivial) != sp_stabilizer_membership(g, x):
            triv_bad = {"matrix": matrix_to_json(g),
                        "point": point_to_json(x.coords)}
            break
    checks.append(_check("trivial_direction_consistency", triv_bad is None,
                         count, triv_bad))

    lim_bad = None
    nonvacuous = 0
    for d in directions[1:]:
        for k in range(count):
            x = SpApartmentPoint(tuple(Fraction(rng.randint(-1, 1))
                                       for _ in range(n)))
            if k % 2 == 0:
                g = sampling.random_sp_ray_adapted(spec, n, x.coords, d.point,
                                                   rng)
            else:
                g = _capped(lambda: sampling.random_sp(spec, n, rng, 3), cap=6)
            along = all(
                sp_stabilizer_membership(
                    g, SpApartmentPoint(tuple(c + s * v for c, v
                                              in zip(x.coords, d.point))))
                for s in range(steps + 1))
            if along:
                nonvacuous += 1
                if not sp_boundary_stabilizes(g, x, d):
                    lim_bad = {"matrix": matrix_to_json(g),
                               "point": point_to_json(x.coords),
                               "direction": point_to_json(d.point)}
                    break
        if lim_bad:
            break
    checks.append(_check("limit_coherence", lim_bad is None and nonvacuous > 0,
                         nonvacuous, lim_bad))

    return _report("sp-boundary", {"seed": seed, "n": n,
                                   "field": spec_to_json(spec), "count": count},
                   checks)
