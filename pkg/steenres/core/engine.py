"""
Extension of a minimal resolution by double induction on (t, s).

extend_naive computes the homology of the full complex at (s, t).
extend_filtered computes it on the zero-signature slice of an admissible
subalgebra B and then repairs the differentials one signature at a time.
"""
import logging

from .abstract import VerifyReport
from .exceptions import (
    EngineError, FrontierViolation, ImageNotInKernel, LiftFailed, NotACycle, NotApplicable,
    NotHomogeneous, ParamError, ResidualNonzero,
)
from .freemod import (
    FreeElement, apply_differential, differential_matrix, element_degree, embed, slice_coordinates,
)
from .gf2 import NoSolution, kernel, quotient_basis, solve, solve_all
from .milnor import UNIT
from .pool import Duration
from .stats import StatsRecord
from .strategy import applicable
from .subalgebra import Signature, covers_degree, enumerate_signatures
from .types import Phase, ViolationKind

LOGGER = logging.getLogger(__name__)

ZERO_SIGNATURE = Signature(UNIT, 0)


def _emit(hooks, record):
    for hook in hooks:
        hook.on_record(record)


def _homology(res, b, s, t, cache):
    """
    Quotient representatives of H at (s, t) on the zero-signature slice (full complex for B = None).
    """
    sig = None if b is None else ZERO_SIGNATURE
    m, domain, _ = differential_matrix(res, b, sig, s, t, cache)
    found = kernel(m)
    cycles = found.basis
    LOGGER.debug("kernel at (%d, %d): %d pivot columns, %d cycles", s, t, len(found.pivots), len(cycles))
    boundaries, _, codomain = differential_matrix(res, b, sig, s + 1, t, cache)
    if codomain.basis != domain.basis:
        raise EngineError("slice bases at ({}, {}) disagree".format(s, t))
    try:
        classes = quotient_basis(cycles, boundaries)
    except ImageNotInKernel as e:
        raise ResidualNonzero("d^2 != 0 at ({}, {}): {}".format(s + 1, t, e))
    return classes, domain, m


def _introduce(res, s, t, differentials):
    for d in differentials:
        res.add_generator(s + 1, t, d)


def extend_naive(res, s, t, cache=None, hooks=()):
    """
    Make C_* exact at (s, t) with the full differential matrices.

    New generators go to C_{s+1} in degree t, one per homology class.

    :return: number of new generators
    :raises: FrontierViolation
    """
    if t < s:
        return 0
    res.check_step(s, t)

    duration = Duration()
    classes, domain, m = _homology(res, None, s, t, cache)
    _introduce(res, s, t, [embed(domain, q) for q in classes])
    duration.stop()

    _emit(hooks, StatsRecord(Phase.HOM, s, t, 0, m.rows, m.cols, duration.ms, len(classes)))
    res.advance(s, t, "naive")
    LOGGER.info("naive step (%d, %d): %d new generators", s, t, len(classes))
    return len(classes)


def _signatures(b, t):
    return [sig for sig in enumerate_signatures(b, t) if sig.rank]


def extend_filtered(res, s, t, b, cache=None, hooks=(), pool=None, force=False):
    """
    Make C_* exact at (s, t) using the signature decomposition for B.

    The homology of E_0 C_* gives candidate cycles x_i. For each nonzero
    signature R in increasing order the R-component e_i of d(x_i) is removed by
    solving M_R f_i = e_i on the induced differential of E_R C_*, and x_i
    becomes x_i + f_i. When every d(x_i) vanishes the x_i become the
    differentials of the new generators.

    :type  force: bool
    :param force: skip the applicability check

    :return: number of new generators
    :raises: NotApplicable, LiftFailed, ResidualNonzero, FrontierViolation
    """
    if t < s:
        return 0
    res.check_step(s, t)
    if not covers_degree(b, t):
        raise ParamError("{} truncated at N={} is too small for degree {}".format(b.name, b.truncation, t))
    if not force and not applicable(b, s, t):
        raise NotApplicable("{} is not applicable at ({}, {})".format(b.name, s, t))

    duration = Duration()
    classes, domain, m = _homology(res, b, s, t, cache)
    xs = [embed(domain, q) for q in classes]
    ds = [apply_differential(res, x) for x in xs]
    duration.stop()
    _emit(hooks, StatsRecord(Phase.HOM, s, t, 0, m.rows, m.cols, duration.ms, len(xs)))

    if xs:
        sigs = _signatures(b, t)
        if pool is not None and pool.threads > 1:
            built = pool.map(lambda sig: differential_matrix(res, b, sig, s, t, cache), sigs, name="matrix")
        else:
            built = None

        for k, sig in enumerate(sigs):
            duration = Duration()
            mr, dom, cod = built[k] if built is not None else differential_matrix(res, b, sig, s, t, cache)
            if not len(cod):
                continue
            errors = [slice_coordinates(cod, d) for d in ds]
            if any(not e.is_zero() for e in errors):
                for i, f in enumerate(solve_all(mr, errors)):
                    if f is NoSolution:
                        LOGGER.error("no correction at (%d, %d) for %s rank %d", s, t, b.name, sig.rank)
                        raise LiftFailed("lifting problem without solution at ({}, {}), signature rank {}".format(
                            s, t, sig.rank), s=s, t=t, rank=sig.rank)
                    if not f.is_zero():
                        correction = embed(dom, f)
                        xs[i] = xs[i] + correction
                        ds[i] = ds[i] + apply_differential(res, correction)
            duration.stop()
            if len(dom):
                _emit(hooks, StatsRecord(Phase.LIFT, s, t, sig.rank, mr.rows, mr.cols, duration.ms, None))

    for i, d in enumerate(ds):
        if d:
            LOGGER.error("residual differential at (%d, %d) for %s: %s", s, t, b.name, d.format())
            raise ResidualNonzero("d(x_{}) != 0 after all signatures at ({}, {})".format(i, s, t))

    _introduce(res, s, t, xs)
    res.advance(s, t, b.name)
    LOGGER.info("filtered step (%d, %d) with %s: %d new generators", s, t, b.name, len(xs))
    return len(xs)


def lift_cycle(res, b, z, cache=None, hooks=()):
    """
    Find w in C_{s+1,t} with d(w) = z for a cycle z in C_{s,t}.

    Solves one lifting problem per signature of B, zero signature included, in
    increasing order. B = None solves a single problem on the full matrix.

    :raises: NotACycle, NotApplicable, LiftFailed, ResidualNonzero, FrontierViolation
    """
    if not z:
        return FreeElement()
    s, t = element_degree(z)
    if apply_differential(res, z):
        raise NotACycle("element of C_{{{},{}}} has nonzero boundary".format(s, t))
    if res.frontier_of(s) < t:
        raise FrontierViolation("resolution is not exact at ({}, {}) yet".format(s, t))

    if b is None:
        sigs = [None]
    else:
        if res.frontier_of(s + 1) < t - 1:
            raise FrontierViolation("resolution is not exact at ({}, {}) yet".format(s + 1, t - 1))
        if not covers_degree(b, t):
            raise ParamError("{} truncated at N={} is too small for degree {}".format(b.name, b.truncation, t))
        if not applicable(b, s + 1, t):
            raise NotApplicable("{} is not applicable for lifting at ({}, {})".format(b.name, s + 1, t))
        sigs = enumerate_signatures(b, t)

    w = FreeElement()
    for sig in sigs:
        rank = 0 if sig is None else sig.rank
        duration = Duration()
        m, dom, cod = differential_matrix(res, b, sig, s + 1, t, cache)
        e = slice_coordinates(cod, z)
        if e.is_zero():
            continue
        f = solve(m, e)
        if f is NoSolution:
            raise LiftFailed("cannot lift at ({}, {}), signature rank {}".format(s, t, rank), s=s, t=t, rank=rank)
        part = embed(dom, f)
        w = w + part
        z = z + apply_differential(res, part)
        duration.stop()
        _emit(hooks, StatsRecord(Phase.LIFT, s + 1, t, rank, m.rows, m.cols, duration.ms, None))

    if z:
        raise ResidualNonzero("lift leaves {} at ({}, {})".format(z.format(), s, t))
    return w


def resolve_range(res, max_s, max_stem, strategy, cache=None, hooks=(), pool=None):
    """
    Extend every bidegree with s <= max_s and t <= max_stem + max_s in the
    order t ascending, then s ascending. Bidegrees already inside the frontier
    are skipped, so a restored resolution resumes where it stopped.
    """
    if max_stem < 0 or max_s < 0:
        return res

    for t in range(0, max_stem + max_s + 1):
        for s in range(0, min(t, max_s) + 1):
            if t <= res.frontier_of(s):
                continue
            b = strategy.choose(s, t)
            for hook in hooks:
                hook.pre_step(s, t, b)
            try:
                if b is None:
                    count = extend_naive(res, s, t, cache, hooks)
                else:
                    count = extend_filtered(res, s, t, b, cache, hooks, pool)
            except EngineError as e:
                LOGGER.error("step (%d, %d) failed: %s", s, t, e)
                raise
            for hook in hooks:
                hook.aft_step(s, t, count)
        for hook in hooks:
            hook.aft_degree(t)
    return res


def _degree_violations(res, gen):
    out = []
    for _, h in gen.differential.terms:
        if h.s != gen.s - 1 or h.index >= res.ngens(h.s):
            out.append("term on unknown generator ({}, {})".format(h.s, h.index))
    if not out and gen.differential:
        try:
            if element_degree(gen.differential) != (gen.s - 1, gen.t):
                out.append("differential is not in C_{{{},{}}}".format(gen.s - 1, gen.t))
        except NotHomogeneous as e:
            out.append(str(e))
    return out


def verify(res, deep=False):
    """
    Check d^2 = 0, minimality and, when deep, exactness inside the frontier.

    :rtype: VerifyReport
    """
    report = VerifyReport()

    c0 = res.generators(0)
    if len(c0) != 1 or c0[0].t != 0 or c0[0].differential:
        report.add(ViolationKind.AUGMENTATION, 0, 0, None, "C_0 must be free on one generator in degree 0")

    broken = set()
    for gen in res.all_generators():
        if gen.s == 0:
            continue
        for message in _degree_violations(res, gen):
            report.add(ViolationKind.EXACTNESS, gen.s, gen.t, gen.index, message)
            broken.add((gen.s, gen.index))
        if any(r == UNIT for r, _ in gen.differential.terms):
            report.add(ViolationKind.MINIMALITY, gen.s, gen.t, gen.index, "differential has a unit term")
        if gen.s >= 2 and (gen.s, gen.index) not in broken:
            dd = apply_differential(res, gen.differential)
            if dd:
                report.add(ViolationKind.D_SQUARED, gen.s, gen.t, gen.index, "d(d(g)) = {}".format(dd.format()))

    if deep and not broken:
        _verify_exactness(res, report)
    LOGGER.info("verify%s: %d violations", " (deep)" if deep else "", len(report))
    return report


def _verify_exactness(res, report):
    for s, top in res.frontier.items():
        for t in range(max(s, 1), top + 1):
            try:
                classes, _, _ = _homology(res, None, s, t, None)
            except EngineError as e:
                report.add(ViolationKind.D_SQUARED, s + 1, t, None, str(e))
                continue
            if classes:
                report.add(ViolationKind.EXACTNESS, s, t, None,
                           "homology of dimension {} inside the frontier".format(len(classes)))


def chart(res):
    """
    (s, t, n) for every bidegree where C_s has n > 0 generators, sorted by (t - s, s).
    """
    counts = {}
    for gen in res.all_generators():
        counts[(gen.s, gen.t)] = counts.get((gen.s, gen.t), 0) + 1
    return sorted(((s, t, n) for (s, t), n in counts.items()), key=lambda e: (e[1] - e[0], e[0]))
