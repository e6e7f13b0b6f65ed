"""Certificate and oracle checks run by `levelkit verify-paper`."""

from fractions import Fraction
from importlib import resources

GOLDEN_TABLE_N = 5
GOLDEN_LEVEL2_DIMS = (2, 3, 4, 5)
FILTER_PREDICATES = ("anticommutative", "commutative", "jordan", "left_alternative")


# ------------------------------------------------------------------ goldens

def table_golden_name(table):
    return f"table{table}_n{GOLDEN_TABLE_N}.txt"


def level2_golden_name(n):
    return f"level2_n{n}.txt"


def filter_golden_name(predicate, n):
    return f"filter_{predicate}_n{n}.txt"


def golden_texts():
    """Current renderings of every golden file, keyed by file name."""
    from .classify import filtered_level2, level2_list, render_rows
    from .tn import emit_tn_tables, render_table
    out = {}
    rows = emit_tn_tables(GOLDEN_TABLE_N, 5)
    for t in (1, 2, 3):
        out[table_golden_name(t)] = render_table(rows, t, GOLDEN_TABLE_N)
    for n in GOLDEN_LEVEL2_DIMS:
        out[level2_golden_name(n)] = render_rows(level2_list(n))
        for p in FILTER_PREDICATES:
            out[filter_golden_name(p, n)] = render_rows(filtered_level2(n, p))
    return out


def read_golden(name):
    return (resources.files("levelkit") / "data" / name).read_text(encoding="utf-8")


# ------------------------------------------------------------------- checks

def brute_levels(n):
    """Longest descending chain in dominance order, from the full relation."""
    from .partitions import dominates, enumerate_partitions
    parts = sorted(enumerate_partitions(n))
    lev = {}
    for a in parts:  # ascending lexicographic order lists dominated partitions first
        below = [lev[b] for b in parts if b in lev and b != a and dominates(a, b)]
        lev[a] = 1 + max(below) if below else 0
    return lev


def brute_covers(a, parts):
    from .partitions import dominates
    strictly = [b for b in parts if b != a and dominates(a, b)]
    return {b for b in strictly
            if not any(c != b and dominates(c, b) for c in strictly)}


def check_partitions(max_n=9):
    from .partitions import enumerate_partitions, level, preceding
    count = 0
    for n in range(1, max_n + 1):
        parts = list(enumerate_partitions(n))
        lev = brute_levels(n)
        for a in parts:
            if level(a) != lev[tuple(a)] or set(preceding(a)) != brute_covers(a, parts):
                return False, f"mismatch at {a}"
            count += 1
    return True, f"{count} partitions"


def check_specters(max_total=5):
    from .spectra import canonical_matrix, enumerate_specters, fs_of_matrix
    count = 0
    for total in range(1, max_total + 1):
        for s in enumerate_specters(total, (-1, 0, 1, 2)):
            if fs_of_matrix(canonical_matrix(s)) != s:
                return False, f"roundtrip fails at {s!r}"
            count += 1
    return True, f"{count} specters"


def check_witnesses():
    from .degeneration import verify_witness, witness_library
    lib = witness_library()
    bad = [name for name, w in lib if not verify_witness(w)]
    return not bad, (f"{len(lib)} witnesses" if not bad else f"failed: {', '.join(bad)}")


def check_rsets():
    from .degeneration import SHIPPED_RSETS, rset_lt_invariance
    for n in (3, 4):
        for name, build in SHIPPED_RSETS.items():
            v = rset_lt_invariance(build(n))
            if not v:
                return False, f"{name} at n={n}: {v.message}"
    return True, f"{len(SHIPPED_RSETS)} sets at n=3,4"


def check_goldens():
    texts = golden_texts()
    bad = [name for name, text in texts.items() if read_golden(name) != text]
    return not bad, (f"{len(texts)} files" if not bad else f"differs: {', '.join(bad)}")


def check_filters():
    from .classify import check_filtered, filtered_level2
    for n in GOLDEN_LEVEL2_DIMS:
        for p in FILTER_PREDICATES:
            if not check_filtered(filtered_level2(n, p), p, n):
                return False, f"{p} at n={n}"
    return True, "surviving rows satisfy their identity"


def check_tn_primary(max_total=3):
    from .degeneration import verify_witness
    from .spectra import enumerate_specters
    from .tn import TnPoint, degenerates_T, primary_set_T, primary_witness_T
    seen, count = set(), 0
    for total in range(1, max_total + 1):
        for s in enumerate_specters(total, (0, 1, 2)):
            for r in (0, 1):
                p = TnPoint(r, s)
                if p in seen:
                    continue
                seen.add(p)
                for q in primary_set_T(p):
                    if not degenerates_T(p, q) or not verify_witness(primary_witness_T(p, q)):
                        return False, f"{p!r} -> {q!r}"
                    count += 1
    return True, f"{count} primary pairs"


def check_g2(quick=False, jobs=1):
    from .extensions import g2_sweep, normal_base
    entries = (0, 1) if quick else (-1, 0, 1)
    rep = g2_sweep(normal_base("A3")[0], entries, 2, jobs)
    return rep.ok, f"{rep.total} tuples, {rep.g2_true} with G=2, {len(rep.disagreements)} disagree"


def check_bilinear():
    from .catalog import catalog
    from .classify import bilinear_level_chain
    from .degeneration import verify_witness
    for n in (3, 4, 5):
        chain = bilinear_level_chain(catalog("F+k", [Fraction(1, 3), Fraction(2, 5)], n))
        if len(chain) != 2 or not all(verify_witness(w) for w in chain):
            return False, f"F+k at n={n}"
    return True, "F+k chains of length 2 at n=3,4,5"


def _run(name, quick, jobs):
    fn = CHECKS[name]
    try:
        if name == "g2-sweep":
            ok, detail = fn(quick, jobs)
        else:
            ok, detail = fn()
    except Exception as exc:  # a crash is a failed check, reported in order
        ok, detail = False, f"{type(exc).__name__}: {exc}"
    return name, ok, detail


CHECKS = {
    "partitions": check_partitions,
    "specters": check_specters,
    "witnesses": check_witnesses,
    "rsets": check_rsets,
    "goldens": check_goldens,
    "filters": check_filters,
    "tn-primary": check_tn_primary,
    "bilinear": check_bilinear,
    "g2-sweep": check_g2,
}


def run_checks(jobs=1, quick=False):
    """(name, ok, detail) for every check, in a fixed order."""
    names = list(CHECKS)
    if jobs <= 1:
        return [_run(name, quick, 1) for name in names]
    from concurrent.futures import ProcessPoolExecutor
    fast = [n for n in names if n != "g2-sweep"]
    with ProcessPoolExecutor(jobs) as pool:
        res = list(pool.map(_run, fast, [quick] * len(fast), [1] * len(fast)))
    res.append(_run("g2-sweep", quick, jobs))
    order = {n: i for i, n in enumerate(names)}
    return sorted(res, key=lambda r: order[r[0]])
