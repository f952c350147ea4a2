"""Table rows, golden corpus, rendering, and the verification suite."""

import csv
import io
import json
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, fields
from importlib import resources
from pathlib import Path

from .dynamics import DEFAULT_MAX_STEPS, simulate_binary_period
from .errors import StepBudgetExceeded
from .partitions import (
    best_coset,
    distinct_partition_count,
    explicit_prime_bound,
    partition_count,
    unit_coset_representatives,
    verify_injection,
)
from .period import (
    is_primitive_root_prime,
    pell_no_odd_solutions,
    period_algebraic,
    period_any,
    prime_power_base,
    validate_theorems,
)

GOLDEN_MAX_N = 101
SIMULATION_LIMIT = 4 * 10**6
INJECTION_COUNT_LIMIT = 10**4
INJECTION_MAX_N = 61
EXPLICIT_BOUND_MARGIN = 10
IDENTITY_MAX_P = 61


@dataclass(frozen=True)
class TableRow:
    n: int
    period: int
    t: int
    a: int
    partition_count: int


ROW_FIELDS = [f.name for f in fields(TableRow)]


def rows_for(n, seed=1):
    rec = period_algebraic(n, seed)
    return [TableRow(n, rec.period, rec.t, a, partition_count(a, n)) for a in unit_coset_representatives(n)]


def _map(fn, items, threads):
    if threads <= 1:
        return [fn(x) for x in items]
    with ProcessPoolExecutor(max_workers=threads) as pool:
        return list(pool.map(fn, items))


def _rows_seeded(args):
    n, seed = args
    return rows_for(n, seed)


def compute_table(max_n, seed=1, threads=1):
    ns = range(3, max_n + 1, 2)
    chunks = _map(_rows_seeded, [(n, seed) for n in ns], threads)
    return sorted((r for chunk in chunks for r in chunk), key=lambda r: (r.n, r.a))


def rows_to_csv(rows):
    buf = io.StringIO()
    w = csv.writer(buf, lineterminator="\n")
    w.writerow(ROW_FIELDS)
    for r in rows:
        w.writerow([getattr(r, k) for k in ROW_FIELDS])
    return buf.getvalue()


def rows_to_json(rows):
    return json.dumps([asdict(r) for r in rows], indent=2)


def rows_from_json(text):
    return [TableRow(**d) for d in json.loads(text)]


def rows_to_text(rows):
    # dashes for repeated n, as in the published layout
    out = [f"{'n':>5} {'P(n)':>20} {'t':>5} {'a':>5} {'#P_a,n':>10}"]
    prev = None
    for r in rows:
        if r.n == prev:
            out.append(f"{'-':>5} {'-':>20} {'-':>5} {r.a:>5} {r.partition_count:>10}")
        else:
            out.append(f"{r.n:>5} {r.period:>20} {r.t:>5} {r.a:>5} {r.partition_count:>10}")
        prev = r.n
    return "\n".join(out) + "\n"


def read_rows_csv(text):
    return [TableRow(**{k: int(v) for k, v in d.items()}) for d in csv.DictReader(io.StringIO(text))]


def _data_text(name):
    return resources.files("ducci").joinpath("data", name).read_text()


def load_golden(path=None):
    text = Path(path).read_text() if path else _data_text("table1.csv")
    return read_rows_csv(text)


def load_n109():
    return {int(d["a"]): int(d["partition_count"]) for d in csv.DictReader(io.StringIO(_data_text("n109.csv")))}


def read_bfile(path):
    """OEIS b-file: ``n value`` per line, ``#`` comments."""
    values = {}
    for line in Path(path).read_text().splitlines():
        line = line.split("#", 1)[0].strip()
        if not line:
            continue
        n, v = line.split()[:2]
        values[int(n)] = int(v)
    return values


@dataclass
class Check:
    name: str
    passed: bool = True
    failures: list = field(default_factory=list)
    cases: int = 0

    def fail(self, msg):
        self.passed = False
        self.failures.append(msg)


def _simulate(args):
    n, max_steps = args
    try:
        return simulate_binary_period(n, max_steps).period
    except StepBudgetExceeded:
        return None


def _injection(args):
    a, n, seed = args
    return verify_injection(a, n, seed)


def run_verify(max_n, seed=1, threads=1, max_steps=DEFAULT_MAX_STEPS, golden_path=None, oeis_path=None):
    """Run every check over odd 3 <= n <= max_n; returns a list of Check."""
    rows = compute_table(max_n, seed, threads)
    records = {n: period_algebraic(n, seed) for n in range(3, max_n + 1, 2)}
    checks = []

    c = Check("golden_table")
    golden = {(r.n, r.a): r for r in load_golden(golden_path) if r.n <= min(max_n, GOLDEN_MAX_N)}
    computed = {(r.n, r.a): r for r in rows if r.n <= GOLDEN_MAX_N}
    for key in sorted(set(golden) | set(computed)):
        g, got = golden.get(key), computed.get(key)
        c.cases += 1
        if g is None or got is None:
            c.fail(f"n={key[0]} a={key[1]}: row {'missing from golden' if g is None else 'not computed'}")
            continue
        for name in ("period", "t", "partition_count"):
            if getattr(g, name) != getattr(got, name):
                c.fail(f"n={key[0]} a={key[1]} {name}: golden {getattr(g, name)} != computed {getattr(got, name)}")
    checks.append(c)

    c1, c2 = Check("theorem1"), Check("theorem2")
    for n, rec in records.items():
        for clause, ok in validate_theorems(n, rec).items():
            target = c1 if clause.startswith("thm1") else c2
            target.cases += 1
            if not ok:
                target.fail(f"n={n}: {clause}")
        if rec.pell_no_odd:
            c1.cases += 1
            res = pell_no_odd_solutions(prime_power_base(n))
            if res.has_odd_solution:
                c1.fail(f"n={n}: Pell search inconsistent")
    checks += [c1, c2]

    c = Check("main_theorem")
    for r in rows:
        c.cases += 1
        if r.period < r.partition_count:
            c.fail(f"n={r.n} a={r.a}: P={r.period} < #P={r.partition_count}")
    checks.append(c)

    c = Check("simulation_vs_algebra")
    sim_ns = [n for n, rec in records.items() if rec.period <= SIMULATION_LIMIT]
    for n, p in zip(sim_ns, _map(_simulate, [(n, max_steps) for n in sim_ns], threads)):
        c.cases += 1
        if p != records[n].period:
            c.fail(f"n={n}: simulated {p} != algebraic {records[n].period}")
    checks.append(c)

    c = Check("injection")
    jobs = [
        (r.a, r.n, seed)
        for r in rows
        if r.n <= INJECTION_MAX_N and r.partition_count <= INJECTION_COUNT_LIMIT
    ]
    for job, ok in zip(jobs, _map(_injection, jobs, threads)):
        c.cases += 1
        if not ok:
            c.fail(f"n={job[1]} a={job[0]}: powers of zeta+1 collide")
    checks.append(c)

    c = Check("best_coset_109")
    expected = load_n109()
    best_a = max(expected, key=lambda a: (expected[a], -a))
    c.cases = 2
    if partition_count(1, 109) != expected[1]:
        c.fail(f"#P_(1,109) = {partition_count(1, 109)} != {expected[1]}")
    got = best_coset(109)
    if got != (best_a, expected[best_a]):
        c.fail(f"best_coset(109) = {got} != {(best_a, expected[best_a])}")
    checks.append(c)

    c = Check("explicit_prime_bound")
    for n, rec in records.items():
        if is_primitive_root_prime(n):
            c.cases += 1
            bound = explicit_prime_bound(n)
            if not rec.period >= EXPLICIT_BOUND_MARGIN * bound:
                c.fail(f"n={n}: P={rec.period} < {EXPLICIT_BOUND_MARGIN} x {bound:.4g}")
    checks.append(c)

    c = Check("distinct_partition_identity")
    for p in range(3, min(max_n, IDENTITY_MAX_P) + 1, 2):
        if is_primitive_root_prime(p):
            c.cases += 1
            lhs = partition_count(1, p)
            rhs = sum(distinct_partition_count(m) for m in range(p - 1))
            if lhs != rhs:
                c.fail(f"p={p}: #P_(1,p)={lhs} != sum q(m)={rhs}")
    checks.append(c)

    if oeis_path:
        c = Check("oeis_bfile")
        for n, v in sorted(read_bfile(oeis_path).items()):
            if 1 <= n <= max_n:
                c.cases += 1
                got = period_any(n, seed).period
                if got != v:
                    c.fail(f"n={n}: computed {got} != b-file {v}")
        checks.append(c)

    return checks


def checks_to_text(checks):
    out = []
    for c in checks:
        out.append(f"[{'PASS' if c.passed else 'FAIL'}] {c.name} ({c.cases} cases)")
        out.extend(f"    {msg}" for msg in c.failures)
    passed = sum(c.passed for c in checks)
    out.append(f"{passed}/{len(checks)} checks passed")
    return "\n".join(out) + "\n"


def checks_to_json(checks):
    return json.dumps([asdict(c) for c in checks], indent=2)
