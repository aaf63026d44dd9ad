"""Covers, envelopes, minimal presentations, resolutions, graded dimensions.

Finitely generated projectives are handled formally: a ProjSum is a list of
(vertex, shift) summands and a PMap is a matrix of algebra elements acting by
right multiplication.  Formal data is exact in every degree; realizations on
a window are produced on demand.  Everything injective-side is obtained by
dualizing the projective-side machinery over the opposite algebra.
"""

from .errors import InputError, WindowError, MathRefusal
from .algebra import AlgElement
from .gmodule import (GradedMorphism, ModuleElement,
                      direct_sum, zero_module, _complement_columns)
from .linalg import Matrix


class ProjSum:
    """A formal finite direct sum of shifted projectives + P_{a}<s>."""

    def __init__(self, algebra, summands):
        self.algebra = algebra
        self.summands = tuple((str(a), int(s)) for a, s in summands)
        for a, _s in self.summands:
            algebra.quiver.check_vertex(a)
        self._realized = {}

    def __len__(self):
        return len(self.summands)

    def is_zero(self):
        return not self.summands

    def dim_at(self, i, x):
        return sum(self.algebra.dim_piece(i + s, a, x) for a, s in self.summands)

    def shift(self, s):
        return ProjSum(self.algebra, [(a, t + s) for a, t in self.summands])

    def realize(self, window):
        """(module, per-summand offset maps) on the given window; memoized."""
        window = tuple(window)
        got = self._realized.get(window)
        if got is not None:
            return got
        from .gmodule import standard_module
        if not self.summands:
            result = zero_module(self.algebra, *window), []
        else:
            parts = [standard_module(self.algebra, "P", a, s, window=window)
                     for a, s in self.summands]
            total, _, _ = direct_sum(parts)
            offsets = []
            acc = {}
            for part in parts:
                off = {}
                for (i, x), n in part.dims.items():
                    off[(i, x)] = acc.get((i, x), 0)
                    acc[(i, x)] = acc.get((i, x), 0) + n
                offsets.append(off)
            result = total, offsets
        self._realized[window] = result
        return result

    def opposite(self):
        """The transpose sum over the opposite algebra: P_a<s> -> P°_a<-s>."""
        return ProjSum(self.algebra.opposite(), [(a, -s) for a, s in self.summands])

    def to_json(self):
        return [[a, s] for a, s in self.summands]

    def __repr__(self):
        return "(+)".join(f"P_{a}<{s}>" for a, s in self.summands) or "0"


class PMap:
    """A morphism of formal projective sums, one algebra element per entry.

    The entry from source summand j = P_{b}<t> into target summand i =
    P_{a}<s> lies in e_b A_{s-t} e_a and acts by right multiplication.
    """

    def __init__(self, src, dst, entries):
        if src.algebra is not dst.algebra:
            raise InputError("projective map across different algebras")
        self.algebra = src.algebra
        self.src = src
        self.dst = dst
        self.entries = [[None] * len(src) for _ in range(len(dst))]
        for i in range(len(dst)):
            for j in range(len(src)):
                e = entries[i][j] if entries else None
                if e is None or e.is_zero():
                    continue
                a, s = dst.summands[i]
                b, t = src.summands[j]
                if (e.source, e.target, e.degree) != (a, b, s - t):
                    raise InputError(f"entry ({i},{j}) lies in the wrong piece")
                self.entries[i][j] = e
        self._realized = {}

    def shift(self, s):
        """The grading shift: same entries between shifted sums."""
        return PMap(self.src.shift(s), self.dst.shift(s),
                    [row[:] for row in self.entries])

    def realized_kernel(self, window):
        """(kernel module, inclusion) of the realization; memoized."""
        key = ("kernel", tuple(window))
        got = self._realized.get(key)
        if got is None:
            got = self.realize(window).kernel()
            self._realized[key] = got
        return got

    @classmethod
    def zero(cls, src, dst):
        return cls(src, dst, None)

    def is_zero(self):
        return all(e is None for row in self.entries for e in row)

    def is_radical(self):
        """True when every nonzero entry has degree >= 1."""
        return all(e is None or e.degree >= 1 for row in self.entries for e in row)

    def compose(self, other):
        """self after other."""
        if other.dst.summands != self.src.summands:
            raise InputError("formal composition endpoint mismatch")
        alg = self.algebra
        entries = [[None] * len(other.src) for _ in range(len(self.dst))]
        for i in range(len(self.dst)):
            for j in range(len(other.src)):
                acc = None
                for m in range(len(self.src)):
                    g = other.entries[m][j]
                    f = self.entries[i][m]
                    if g is None or f is None:
                        continue
                    prod = alg.multiply(g, f)
                    acc = prod if acc is None else acc + prod
                entries[i][j] = acc
        return PMap(other.src, self.dst, entries)

    def realize(self, window):
        """The induced morphism between realizations on the window; memoized."""
        window = tuple(window)
        got = self._realized.get(window)
        if got is not None:
            return got
        src_mod, src_off = self.src.realize(window)
        dst_mod, dst_off = self.dst.realize(window)
        alg = self.algebra
        f = alg.field
        blocks = {}
        for (d, x), ncols in src_mod.dims.items():
            nrows = dst_mod.dims.get((d, x), 0)
            if nrows == 0:
                continue
            entries = [[f.zero()] * ncols for _ in range(nrows)]
            for i, (a, s) in enumerate(self.dst.summands):
                for j, (b, t) in enumerate(self.src.summands):
                    e = self.entries[i][j]
                    if e is None:
                        continue
                    blk = alg.right_mult_matrix(e, d + t, x)
                    if blk.rows == 0 or blk.cols == 0:
                        continue
                    r0 = dst_off[i][(d, x)]
                    c0 = src_off[j][(d, x)]
                    for r in range(blk.rows):
                        for c in range(blk.cols):
                            entries[r0 + r][c0 + c] = f.add(entries[r0 + r][c0 + c],
                                                            blk.data[r][c])
            blocks[(d, x)] = Matrix(f, nrows, ncols, entries)
        result = GradedMorphism(src_mod, dst_mod, blocks, check=False)
        self._realized[window] = result
        return result

    def transpose_to_opposite(self):
        """Entrywise opposite-translation with source and target roles swapped."""
        alg = self.algebra
        src_t = self.dst.opposite()
        dst_t = self.src.opposite()
        entries = [[None] * len(src_t) for _ in range(len(dst_t))]
        for i in range(len(self.dst)):
            for j in range(len(self.src)):
                e = self.entries[i][j]
                if e is not None:
                    entries[j][i] = alg.element_opposite(e)
        return PMap(src_t, dst_t, entries)

    def to_json(self):
        return [[None if e is None else e.to_json_dict() for e in row]
                for row in self.entries]

    def __repr__(self):
        return f"PMap({self.src!r} -> {self.dst!r})"


class InjSum:
    """A formal finite direct sum of shifted injectives + I_{a}<s>."""

    def __init__(self, algebra, summands):
        self.algebra = algebra
        self.summands = tuple((str(a), int(s)) for a, s in summands)

    def __len__(self):
        return len(self.summands)

    def is_zero(self):
        return not self.summands

    def dim_at(self, i, x):
        opp = self.algebra.opposite()
        return sum(opp.dim_piece(-i - s, a, x) for a, s in self.summands)

    def opposite_projsum(self):
        """The ProjSum over the opposite algebra whose dual this is."""
        return ProjSum(self.algebra.opposite(), [(a, -s) for a, s in self.summands])

    def realize(self, window):
        from .gmodule import standard_module
        if not self.summands:
            return zero_module(self.algebra, *window)
        parts = [standard_module(self.algebra, "I", a, s, window=window)
                 for a, s in self.summands]
        total, _, _ = direct_sum(parts)
        return total

    def to_json(self):
        return [[a, s] for a, s in self.summands]

    def __repr__(self):
        return "(+)".join(f"I_{a}<{s}>" for a, s in self.summands) or "0"


class IMap:
    """A morphism of formal injective sums, induced by right multiplications.

    Data-identical to the PMap it is the Nakayama image of: the entry from
    source summand I_{b}<t> into target summand I_{a}<s> is the element of
    e_b A_{s-t} e_a whose dual right multiplication realizes the block.
    """

    def __init__(self, src, dst, entries):
        self.algebra = src.algebra
        self.src = src
        self.dst = dst
        # reuse PMap validation on the underlying projective data
        self._pdata = PMap(ProjSum(self.algebra, src.summands),
                           ProjSum(self.algebra, dst.summands), entries)
        self.entries = self._pdata.entries

    def is_zero(self):
        return self._pdata.is_zero()

    def realize(self, window):
        """Realized as the dual of the opposite projective map."""
        lo, hi = window
        op = self._pdata.transpose_to_opposite()  # dst° -> src° over the opposite
        real = op.realize((-hi, -lo))
        return real.dual()

    def to_json(self):
        return self._pdata.to_json()

    def __repr__(self):
        return f"IMap({self.src!r} -> {self.dst!r})"


# -- generators --------------------------------------------------------------


def top_basis(M, gen_degree_bound=None):
    """Pure elements lifting a basis of top M, lowest degrees first.

    Needs M exact below.  Generators are enumerated up to `gen_degree_bound`;
    without a bound the module must be exact above so that no generator can
    hide beyond the window.
    """
    if not M.exact_below:
        raise WindowError("top-basis needs the module exact below")
    if gen_degree_bound is None:
        if not M.exact_above:
            raise WindowError("top-basis of a module truncated above needs a "
                              "generator-degree bound")
        bound = M.hi
    else:
        bound = min(gen_degree_bound, M.hi)
    if M.is_zero():
        return []
    _rad, incl = M.radical()
    out = []
    for (i, x) in M.support():
        if i > bound:
            continue
        radbasis = incl.block(i, x)
        comp = _complement_columns(M.algebra.field, radbasis, M.dims[(i, x)])
        for c in range(comp.cols):
            out.append(ModuleElement(M, i, x, comp.col(c)))
    return out


def soc_basis(M):
    """A basis of soc M as pure elements of M."""
    soc, incl = M.socle()
    out = []
    for (i, x) in soc.support():
        blk = incl.block(i, x)
        for c in range(blk.cols):
            out.append(ModuleElement(M, i, x, blk.col(c)))
    return out


class Cover:
    """A projective cover: formal sum, generator images, realized epimorphism."""

    def __init__(self, psum, generators):
        self.psum = psum
        self.generators = generators

    def realize(self, module, window=None):
        """The cover morphism onto `module` (re-windowed to `window`)."""
        window = window or (module.lo, module.hi)
        target = module.with_window(*window)
        src, offsets = self.psum.realize(window)
        f = src.algebra.field
        blocks = {}
        for (i, x), ncols in src.dims.items():
            nrows = target.dims.get((i, x), 0)
            entries = [[f.zero()] * ncols for _ in range(nrows)]
            if nrows:
                for j, ((b, s), gen) in enumerate(zip(self.psum.summands, self.generators)):
                    piece = src.algebra.piece(i + s, b, x)
                    if piece.dim == 0:
                        continue
                    c0 = offsets[j][(i, x)]
                    gcol = Matrix.from_cols(f, len(gen.coords), [list(gen.coords)])
                    for c, rep in enumerate(piece.rep_paths):
                        col = target.path_action(rep, gen.degree) @ gcol
                        for r in range(nrows):
                            entries[r][c0 + c] = col.data[r][0]
            blocks[(i, x)] = Matrix(f, nrows, ncols, entries)
        return GradedMorphism(src, target, blocks, check=False)


def projective_cover(M, gen_degree_bound=None):
    """Cover built on one shifted projective per top-basis element."""
    gens = top_basis(M, gen_degree_bound)
    psum = ProjSum(M.algebra, [(g.vertex, -g.degree) for g in gens])
    return Cover(psum, gens)


class ProjPresentation:
    """A minimal projective presentation P1 --d1--> P0 --aug--> M -> 0."""

    def __init__(self, module, p0, cover0, p1, d1, cover1, syzygy, syzygy_incl,
                 window):
        self.module = module
        self.p0 = p0
        self.cover0 = cover0
        self.p1 = p1
        self.d1 = d1
        self.cover1 = cover1            # cover of the syzygy, or None when p1 = 0
        self.syzygy = syzygy            # realized kernel inside p0
        self.syzygy_incl = syzygy_incl  # syzygy -> realized p0
        self.window = window

    def is_minimal(self):
        return self.d1.is_radical()

    def module_is_projective(self):
        return self.p1.is_zero()

    def to_json_dict(self):
        return {"p0": self.p0.to_json(), "p1": self.p1.to_json(),
                "d1": self.d1.to_json(), "window": list(self.window)}


def minimal_presentation(M):
    """Minimal presentation of a finite-dimensional exact-window module.

    The first syzygy K agrees with P0 above the support of M, so all its
    generators live in degrees <= hi(M) + 1 and the fixed working window
    [lo, hi+1] is provably sufficient.
    """
    if not M.is_exact:
        raise WindowError("minimal presentation needs an exact window")
    window = (M.lo, M.hi + 1)
    cover0 = projective_cover(M)
    aug = cover0.realize(M, window)
    K, K_incl = aug.kernel()
    gens1 = top_basis(K, gen_degree_bound=M.hi + 1)
    p0 = cover0.psum
    p1 = ProjSum(M.algebra, [(g.vertex, -g.degree) for g in gens1])
    d1 = _pmap_from_kernel_generators(p0, window, gens1, K_incl)
    cover1 = Cover(p1, gens1)
    return ProjPresentation(M, p0, cover0, p1, d1, cover1, K, K_incl, window)


def _pmap_from_kernel_generators(p0, window, gens, K_incl):
    """Split kernel generators into per-summand algebra-element entries."""
    alg = p0.algebra
    _total, offsets = p0.realize(window)
    entries = [[None] * len(gens) for _ in range(len(p0))]
    for j, g in enumerate(gens):
        vec = K_incl.block(g.degree, g.vertex) @ Matrix.from_cols(
            alg.field, len(g.coords), [list(g.coords)])
        for i, (a, s) in enumerate(p0.summands):
            piece = alg.piece(g.degree + s, a, g.vertex)
            if piece.dim == 0:
                continue
            c0 = offsets[i][(g.degree, g.vertex)]
            coeffs = [vec.data[c0 + k][0] for k in range(piece.dim)]
            if any(coeffs):
                entries[i][j] = AlgElement(alg, g.degree + s, a, g.vertex, coeffs)
    return PMap(ProjSum(alg, [(g.vertex, -g.degree) for g in gens]), p0, entries)


class InjCopresentation:
    """A minimal injective copresentation 0 -> M --d0--> I0 --d1--> I1."""

    def __init__(self, module, i0, d0, i1, d1, cosyzygy, window):
        self.module = module
        self.i0 = i0
        self.d0 = d0              # realized monomorphism M -> I0
        self.i1 = i1
        self.d1 = d1              # formal IMap I0 -> I1
        self.cosyzygy = cosyzygy  # realized cokernel of d0
        self.window = window

    def to_json_dict(self):
        return {"i0": self.i0.to_json(), "i1": self.i1.to_json(),
                "d1": self.d1.to_json(), "window": list(self.window)}


def injective_envelope(M):
    """(InjSum, realized essential monomorphism M -> I) via the dual cover."""
    if not M.is_exact:
        raise WindowError("injective envelope needs an exact window")
    D = M.dual()
    cover = projective_cover(D)
    window = (D.lo, D.hi + 1)
    aug = cover.realize(D, window)
    env = aug.dual()  # M re-windowed -> dual of the opposite projective sum
    isum = InjSum(M.algebra, [(a, -s) for a, s in cover.psum.summands])
    return isum, env


def minimal_copresentation(M):
    """Dualized minimal presentation of the dual module."""
    if not M.is_exact:
        raise WindowError("minimal copresentation needs an exact window")
    D = M.dual()
    pres = minimal_presentation(D)
    i0 = InjSum(M.algebra, [(a, -s) for a, s in pres.p0.summands])
    i1 = InjSum(M.algebra, [(a, -s) for a, s in pres.p1.summands])
    opp = M.algebra.opposite()
    entries = [[None if e is None else opp.element_opposite(e) for e in row]
               for row in _transposed(pres.d1.entries)]
    d1 = IMap(i0, i1, entries)
    aug = pres.cover0.realize(D, pres.window)
    d0 = aug.dual()
    cosyzygy = pres.syzygy.dual_windowed()
    lo, hi = pres.window
    return InjCopresentation(M, i0, d0, i1, d1, cosyzygy, (-hi, -lo))


def _transposed(rows):
    if not rows:
        return []
    return [[rows[i][j] for i in range(len(rows))] for j in range(len(rows[0]))]


class Resolution:
    """A chain of minimal covers P_m -> ... -> P_1 -> P_0 -> M."""

    def __init__(self, module, psums, pmaps, status, length, window):
        self.module = module
        self.psums = psums    # [P_0, ..., P_m]
        self.pmaps = pmaps    # [d_1: P_1 -> P_0, ...]
        self.status = status  # "finite" | "at-least"
        self.length = length  # pd when finite, else the cap
        self.window = window

    def report(self):
        if self.status == "finite":
            return {"kind": "exact", "value": self.length,
                    "window": list(self.window)}
        return {"kind": "at-least", "value": self.length,
                "window": list(self.window)}


def resolution(M, cap, pad=5, window_hi=None):
    """Iterated minimal covers up to homological degree `cap`.

    Generator searches beyond the first syzygy have no a-priori degree bound;
    the working window is grown once by `pad` when a generator shows up at
    the very top of the window, and the run errors out if that happens again.
    Results are exact under the declared contract that every syzygy is
    finitely generated inside the working window.
    """
    if not M.is_exact:
        raise WindowError("resolution needs an exact window")
    hi = window_hi if window_hi is not None else M.hi + 1 + cap + pad
    for attempt in range(2):
        try:
            return _resolution_attempt(M, cap, (M.lo, hi))
        except _NeedsWiderWindow as e:
            if attempt == 1:
                raise WindowError(f"syzygy generator at the window top "
                                  f"(degree {e.degree}); widen the window") from None
            hi += pad
    raise AssertionError("unreachable")


class _NeedsWiderWindow(Exception):
    def __init__(self, degree):
        self.degree = degree


def _resolution_attempt(M, cap, window):
    lo, hi = window
    cover = projective_cover(M)
    psums = [cover.psum]
    pmaps = []
    aug = cover.realize(M, window)
    current, current_incl = aug.kernel()
    step = 0
    while True:
        if current.is_zero():
            return Resolution(M, psums, pmaps, "finite", step, window)
        if step + 1 > cap:
            return Resolution(M, psums, pmaps, "at-least", cap, window)
        bound = M.hi + 1 if step == 0 else hi
        gens = top_basis(current, gen_degree_bound=bound)
        if step > 0 and any(g.degree >= hi for g in gens):
            raise _NeedsWiderWindow(max(g.degree for g in gens))
        if not gens:
            raise MathRefusal("nonzero syzygy without generators in the window")
        prev = psums[-1]
        pnext = ProjSum(M.algebra, [(g.vertex, -g.degree) for g in gens])
        d = _pmap_from_kernel_generators(prev, window, gens, current_incl)
        if not d.is_radical():
            raise MathRefusal("cover produced a non-radical differential")
        psums.append(pnext)
        pmaps.append(d)
        cov = Cover(pnext, gens)
        aug = cov.realize(current, window)
        current, current_incl = aug.kernel()
        step += 1


def graded_dimension(M, kind, cap, pad=5):
    """Graded projective or injective dimension, certified only by vanishing.

    Returns {"kind": "exact"|"at-least", "value": d}.  The injective side is
    the projective dimension of the dual over the opposite algebra.
    """
    if kind == "proj":
        return resolution(M, cap, pad=pad).report()
    if kind == "inj":
        return resolution(M.dual(), cap, pad=pad).report()
    raise InputError(f"unknown dimension kind {kind!r}")
