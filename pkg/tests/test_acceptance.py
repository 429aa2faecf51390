"""The eight acceptance criteria, each at its stated size and tolerance.

Every test records one PASS/FAIL line, printed in the terminal summary.
"""

import math
import random
import time

import pytest
import sympy as sp

import conftest
from oracles import exhaustive_min_branching, exhaustive_unbranched
from spinalbook import zoo
from spinalbook.circle_bundles import build_sob, circle_bundle_verdicts, has_torsion_directly
from spinalbook.cli import classify
from spinalbook.covers import CoverSpec, exists_cover
from spinalbook.forms import (Chart, ChartForm, collar_model_check, contact_check, thurston_threshold)
from spinalbook.io import dumps
from spinalbook.lefschetz import boundary_sob
from spinalbook.obstructions import NOT_STRONGLY_FILLABLE, brute_force_symmetry_oracle, is_symmetric, is_uniform
from spinalbook.sampling import random_book, random_cover_spec, random_lefschetz, random_multicurve
from spinalbook.sob import Orbit, PaperComponent, SpinalOpenBook, Target, Vertebra, canonicalize, validate
from spinalbook.surfaces import DISK, Surface, euler
from spinalbook.surgery import binding_sum, fiber_sum_pages, spine_remove


def record(n, ok, detail):
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} ({detail})"
    conftest.ACCEPTANCE_LINES.append(line)
    print(line)
    assert ok, line


def spine_chi(sob):
    return sum(euler(v.surface) for v in sob.vertebrae)


def test_1_symmetry_oracle():
    rng = random.Random(1)
    books = [random_book(rng, max_vertebrae=4, max_papers=4, max_page_genus=2, max_page_boundary=4, max_orbit=3)
             for _ in range(200)]
    start = time.perf_counter()
    agree = sum(bool(is_symmetric(b)) == brute_force_symmetry_oracle(b) for b in books)
    elapsed = time.perf_counter() - start
    n_sym = sum(bool(is_symmetric(b)) for b in books)
    record(1, agree == 200 and elapsed < 2.0,
           f"{agree}/200 agree, {n_sym} symmetric, {elapsed:.3f}s")


def test_2_cover_oracle():
    rng = random.Random(2)
    start = time.perf_counter()
    agree, rh_bad, n_exist = 0, 0, 0
    for _ in range(500):
        spec = random_cover_spec(rng, max_degree=4)
        res = exists_cover(spec)
        agree += res.exists == exhaustive_unbranched(spec.base.genus, spec.boundary_types, spec.degree,
                                                     spec.require_connected)
        n_exist += res.exists
        if res.cover_type is not None:
            rh_bad += euler(res.cover_type) != spec.degree * euler(spec.base) - res.branching
    branched_agree = 0
    for _ in range(100):
        spec = random_cover_spec(rng, max_degree=3, max_generators=3, unbranched=False)
        spec = CoverSpec(spec.base, spec.degree, spec.boundary_types, unbranched=False)
        res = exists_cover(spec)
        branched_agree += (res.branching if res.exists else None) == exhaustive_min_branching(
            spec.base.genus, spec.boundary_types, spec.degree)
        if res.cover_type is not None:
            rh_bad += euler(res.cover_type) != spec.degree * euler(spec.base) - res.branching
    elapsed = time.perf_counter() - start
    record(2, agree == 500 and branched_agree == 100 and rh_bad == 0 and elapsed < 30.0,
           f"{agree}/500 unbranched agree ({n_exist} exist), {branched_agree}/100 minimal branching agree, "
           f"{rh_bad} Riemann-Hurwitz violations, {elapsed:.2f}s")


def test_3_golden_examples():
    outcomes = []
    for name in ("ob_s3", "cb3", "ot"):
        text = dumps(classify(zoo.ENTRIES[name].build()))
        outcomes.append(text == zoo.expected_classify_path(name).read_text())
    ob, cb, ot = (classify(zoo.ENTRIES[n].build()) for n in ("ob_s3", "cb3", "ot"))
    semantic = (ob["symmetric"] and ob["uniform"] and ob["amenable"] and ob["torsion"] is None
                and cb["torsion"]["order"] == 1 and [v["verdict"] for v in cb["verdicts"]] == [NOT_STRONGLY_FILLABLE]
                and ot["torsion"]["order"] == 0 and ot["verdicts"][0]["verdict"] == "Overtwisted")
    record(3, all(outcomes) and semantic, f"byte-identical {sum(outcomes)}/3, expected content {semantic}")


def _open_book(rng):
    page = Surface(rng.randint(0, 2), rng.randint(2, 5))
    paper = PaperComponent(0, page, tuple(range(1, page.boundary + 1)),
                           tuple(Orbit((i + 1,), Target.circle(i)) for i in range(page.boundary)))
    return SpinalOpenBook(tuple(Vertebra(i, DISK, (i,)) for i in range(page.boundary)), (paper,))


def test_4_surgery_bookkeeping():
    rng = random.Random(4)
    failures = []
    for i in range(100):
        sob = random_book(rng, tori=rng.random() < 0.3)
        ids = [v.id for v in sob.vertebrae]
        a = {v for v in ids if rng.random() < 0.4}
        b = {v for v in ids if v not in a and rng.random() < 0.5}
        out, rec = spine_remove(sob, a)
        capped = {}
        for pid, _, n in rec.capped_orbits:
            capped[pid] = capped.get(pid, 0) + n
        if any(euler(new.page) != euler(old.page) + capped.get(old.id, 0) for old, new in zip(sob.papers, out.papers)):
            failures.append(f"book {i}: page chi")
        ab = spine_remove(spine_remove(sob, a)[0], b)[0]
        ba = spine_remove(spine_remove(sob, b)[0], a)[0]
        both = spine_remove(sob, a | b)[0]
        if not canonicalize(ab) == canonicalize(ba) == canonicalize(both):
            failures.append(f"book {i}: commutativity")
        if validate(out) or validate(both):
            failures.append(f"book {i}: spine_remove output invalid")

        ob = _open_book(rng)
        c1, c2 = rng.sample(range(len(ob.vertebrae)), 2)
        bs = binding_sum(ob, c1, c2)
        if validate(bs) or spine_chi(bs) != spine_chi(ob) - 2:
            failures.append(f"book {i}: binding sum")

        sym = random_book(rng, symmetric_bias=1.0)
        if len(sym.papers) < 2:
            continue
        j0, j1 = rng.sample([p.id for p in sym.papers], 2)
        nb = sym.paper(j0).page.boundary
        ident = list(range(1, nb + 1))
        rng.shuffle(ident)
        fs = fiber_sum_pages(sym, j0, j1, ident)
        if validate(fs) or spine_chi(fs) != spine_chi(sym) - nb or len(fs.papers) != len(sym.papers) - 1:
            failures.append(f"book {i}: fiber sum")
    record(4, not failures, f"{len(failures)} failures over 100 books" + (f": {failures[:3]}" if failures else ""))


def test_5_lefschetz_boundary_uniform():
    rng = random.Random(5)
    good = 0
    for _ in range(50):
        lf = random_lefschetz(rng)
        sob = boundary_sob(lf)
        res = is_uniform(sob)
        good += (not validate(sob) and bool(res)
                 and all(not c.branch_points for c in res.certificates.values()))
    record(5, good == 50, f"{good}/50 boundaries valid and uniform with unbranched certificates")


def test_6_closed_form_numerics():
    start = time.perf_counter()
    t = sp.Symbol("t", real=True)
    chart = Chart.build({"phi": (0, 2 * math.pi, True), "t": (-1.0, 0.0), "theta": (0, 2 * math.pi, True)}, 32)
    rep = contact_check(chart, ChartForm(1, {(0,): 1, (2,): sp.exp(t)}))
    contact_err = abs(rep.min_value - math.exp(-1))
    collar = collar_model_check(1, 1)
    field = max(collar.metrics["field_error_per_component"])
    elapsed = time.perf_counter() - start
    record(6, rep.passed and contact_err < 1e-9 and collar.passed and field < 1e-9 and elapsed < 5.0,
           f"contact min error {contact_err:.2e}, field error {field:.2e}, {elapsed:.2f}s")


def test_7_threshold():
    s, t = sp.Symbol("s", real=True), sp.Symbol("t", real=True)
    chart = Chart.build({"s": (-1.0, 0.0), "phi": (0, 2 * math.pi, True), "theta": (0, 2 * math.pi, True)}, 9)
    k0 = thurston_threshold(lambda K: ChartForm(1, {(1,): -2 * s + K * sp.exp(s), (2,): 1}), chart, 20).value
    chart3 = Chart.build({"phi": (0, 2 * math.pi, True), "t": (-1.0, 0.0), "theta": (0, 2 * math.pi, True)}, 8)
    zero = thurston_threshold(lambda K: ChartForm(1, {(0,): 1 + K, (2,): sp.exp(t)}), chart3, 20).value
    record(7, abs(k0 - 2 * math.e) <= 1e-3 and zero == 0.0,
           f"K0 = {k0:.5f} vs 2e = {2 * math.e:.5f}, already-contact K0 = {zero}")


def test_8_circle_bundles():
    rng = random.Random(8)
    agree = 0
    for _ in range(100):
        mc = random_multicurve(rng)
        out = circle_bundle_verdicts(mc)  # raises if the two paths disagree
        agree += (NOT_STRONGLY_FILLABLE in [v.verdict for v in out]) == has_torsion_directly(mc)
    mob = build_sob(zoo.mobius_multicurve())
    sizes = [o.size for p in mob.papers for o in p.orbits]
    record(8, agree == 100 and sizes == [2], f"{agree}/100 agree, one-sided orbit sizes {sizes}")
