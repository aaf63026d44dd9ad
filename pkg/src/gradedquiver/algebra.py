"""The graded algebra of a quiver modulo homogeneous relations.

A piece e_y*A_d*e_x is presented as the span of length-d paths x -> y modulo
the degree-d slice of the relation ideal.  Relation slices are generated by
u*r*v over all path paddings u, v, so no noncommutative Groebner machinery is
needed; every piece is an exact finite-dimensional quotient with a canonical
echelon basis of coset-representative paths.
"""

import threading

from .errors import InputError
from .linalg import Matrix
from .quiver import Path


class Relation:
    """A homogeneous k-combination of parallel paths of equal length >= 2."""

    def __init__(self, terms):
        terms = list(terms)
        if not terms:
            raise InputError("empty relation")
        lengths = {p.length for _, p in terms}
        if len(lengths) != 1:
            raise InputError("relation not homogeneous: mixed path lengths")
        self.degree = lengths.pop()
        if self.degree < 2:
            raise InputError("relation not in (kQ+)^2: path length < 2")
        sources = {p.source for _, p in terms}
        targets = {p.target for _, p in terms}
        if len(sources) != 1 or len(targets) != 1:
            raise InputError("relation paths must be parallel (same source and target)")
        self.source = sources.pop()
        self.target = targets.pop()
        self.terms = tuple(terms)

    def opposite_terms(self, opp_quiver):
        return [(c, opp_quiver.path_from_names(tuple(reversed(p.names()))))
                for c, p in self.terms]


class AlgElement:
    """A pure element of one piece, as coordinates over its echelon basis."""

    __slots__ = ("algebra", "degree", "source", "target", "coeffs")

    def __init__(self, algebra, degree, source, target, coeffs):
        self.algebra = algebra
        self.degree = degree
        self.source = source
        self.target = target
        self.coeffs = tuple(coeffs)
        if len(self.coeffs) != algebra.piece(degree, source, target).dim:
            raise InputError("coefficient length does not match piece dimension")

    def is_zero(self):
        return all(not c for c in self.coeffs)

    def __add__(self, other):
        if (self.degree, self.source, self.target) != (other.degree, other.source, other.target):
            raise InputError("cannot add elements of different pieces")
        f = self.algebra.field
        return AlgElement(self.algebra, self.degree, self.source, self.target,
                          [f.add(a, b) for a, b in zip(self.coeffs, other.coeffs)])

    def scale(self, c):
        f = self.algebra.field
        return AlgElement(self.algebra, self.degree, self.source, self.target,
                          [f.mul(c, v) for v in self.coeffs])

    def to_json_dict(self):
        f = self.algebra.field
        return {"degree": self.degree, "source": self.source, "target": self.target,
                "coeffs": [f.fmt(c) for c in self.coeffs]}

    def __eq__(self, other):
        return (isinstance(other, AlgElement) and self.algebra is other.algebra
                and (self.degree, self.source, self.target) == (other.degree, other.source, other.target)
                and self.coeffs == other.coeffs)

    def __repr__(self):
        basis = self.algebra.piece(self.degree, self.source, self.target).rep_paths
        parts = [f"{self.algebra.field.fmt(c)}*{p!r}" for c, p in zip(self.coeffs, basis) if c]
        return " + ".join(parts) if parts else "0"


class _Piece:
    """Basis data for one piece: paths, relation-slice echelon, coset reps."""

    __slots__ = ("paths", "index", "rel_rref", "pivots", "rep_indices", "rep_paths", "dim")

    def __init__(self, paths, rel_rref, pivots):
        self.paths = paths
        self.index = {p.names(): i for i, p in enumerate(paths)}
        self.rel_rref = rel_rref
        self.pivots = pivots
        pivset = set(pivots)
        self.rep_indices = [i for i in range(len(paths)) if i not in pivset]
        self.rep_paths = [paths[i] for i in self.rep_indices]
        self.dim = len(self.rep_indices)

    def reduce(self, field, vec):
        """Normal form of a path-coordinate vector: coordinates over reps."""
        w = list(vec)
        for r, c in enumerate(self.pivots):
            if w[c]:
                factor = w[c]
                row = self.rel_rref.data[r]
                for j in range(c, len(w)):
                    if row[j]:
                        w[j] = field.sub(w[j], field.mul(factor, row[j]))
        return [w[i] for i in self.rep_indices]


class GradedAlgebra:
    """kQ/R with an exact field, homogeneous relations, memoized piece bases."""

    def __init__(self, quiver, field, relations):
        self.quiver = quiver
        self.field = field
        self.relations = tuple(relations)
        for r in self.relations:
            quiver.check_vertex(r.source)
        self._pieces = {}
        self._lock = threading.Lock()
        self._opp = None

    # -- piece bases ---------------------------------------------------

    def piece(self, degree, source, target):
        """Echelon basis data of e_target * A_degree * e_source."""
        key = (degree, source, target)
        got = self._pieces.get(key)
        if got is not None:
            return got
        piece = self._compute_piece(degree, source, target)
        with self._lock:
            # insert-once: a concurrent filler computed identical data
            return self._pieces.setdefault(key, piece)

    def _compute_piece(self, degree, source, target):
        if degree < 0:
            return _Piece([], Matrix.zeros(self.field, 0, 0), ())
        paths = self.quiver.paths(degree, source, target)
        if degree < 2 or not paths:
            return _Piece(paths, Matrix.zeros(self.field, 0, len(paths)), ())
        index = {p.names(): i for i, p in enumerate(paths)}
        rows = []
        for rel in self.relations:
            pad = degree - rel.degree
            if pad < 0:
                continue
            for a in range(pad + 1):
                b = pad - a
                for v in self.quiver.paths(a, source, rel.source):
                    for u in self.quiver.paths(b, rel.target, target):
                        row = [self.field.zero()] * len(paths)
                        for coeff, p in rel.terms:
                            full = u.compose(p).compose(v)
                            row[index[full.names()]] = self.field.add(
                                row[index[full.names()]], self.field.of(coeff))
                        rows.append(row)
        if not rows:
            return _Piece(paths, Matrix.zeros(self.field, 0, len(paths)), ())
        rel_mat = Matrix(self.field, len(rows), len(paths), rows)
        rref, pivots = rel_mat.rref()
        return _Piece(paths, rref, pivots)

    def dim_piece(self, degree, source, target):
        return self.piece(degree, source, target).dim

    def piece_basis(self, degree, source, target):
        """Ordered coset-representative paths of the piece."""
        return list(self.piece(degree, source, target).rep_paths)

    # -- elements ------------------------------------------------------

    def zero_element(self, degree, source, target):
        dim = self.dim_piece(degree, source, target)
        return AlgElement(self, degree, source, target, [self.field.zero()] * dim)

    def unit(self, vertex):
        self.quiver.check_vertex(vertex)
        return AlgElement(self, 0, vertex, vertex, [self.field.one()])

    def element_from_path(self, path):
        piece = self.piece(path.length, path.source, path.target)
        vec = [self.field.zero()] * len(piece.paths)
        vec[piece.index[path.names()]] = self.field.one()
        return AlgElement(self, path.length, path.source, path.target,
                          piece.reduce(self.field, vec))

    def arrow_element(self, name):
        if name not in self.quiver.arrow_by_name:
            raise InputError(f"unknown arrow {name!r}")
        a = self.quiver.arrow_by_name[name]
        return self.element_from_path(Path((a,)))

    def element_from_terms(self, terms):
        """Element from (coeff, Path) terms, all in one piece."""
        terms = list(terms)
        degree = terms[0][1].length
        source = terms[0][1].source
        target = terms[0][1].target
        piece = self.piece(degree, source, target)
        vec = [self.field.zero()] * len(piece.paths)
        for c, p in terms:
            if (p.length, p.source, p.target) != (degree, source, target):
                raise InputError("terms of an element must lie in one piece")
            i = piece.index[p.names()]
            vec[i] = self.field.add(vec[i], self.field.of(c))
        return AlgElement(self, degree, source, target, piece.reduce(self.field, vec))

    def multiply(self, u, v):
        """u*v, meaning v acts first: source(u) must equal target(v)."""
        if u.algebra is not self or v.algebra is not self:
            raise InputError("elements of a different algebra")
        if u.source != v.target:
            raise InputError(f"endpoint mismatch: source {u.source!r} vs target {v.target!r}")
        degree = u.degree + v.degree
        out_piece = self.piece(degree, v.source, u.target)
        vec = [self.field.zero()] * len(out_piece.paths)
        u_piece = self.piece(u.degree, u.source, u.target)
        v_piece = self.piece(v.degree, v.source, v.target)
        for cu, pu in zip(u.coeffs, u_piece.rep_paths):
            if not cu:
                continue
            for cv, pv in zip(v.coeffs, v_piece.rep_paths):
                if not cv:
                    continue
                idx = out_piece.index[pu.compose(pv).names()]
                vec[idx] = self.field.add(vec[idx], self.field.mul(cu, cv))
        return AlgElement(self, degree, v.source, u.target,
                          out_piece.reduce(self.field, vec))

    # -- multiplication matrices ----------------------------------------

    def left_mult_matrix(self, u, degree, gen_vertex):
        """Matrix of w -> u*w on e_{u.source}A_degree e_gen -> e_{u.target}A_{degree+deg u} e_gen."""
        src_piece = self.piece(degree, gen_vertex, u.source)
        tgt_dim = self.dim_piece(degree + u.degree, gen_vertex, u.target)
        cols = []
        for p in src_piece.rep_paths:
            w = self.element_from_path(p)
            cols.append(list(self.multiply(u, w).coeffs))
        return Matrix.from_cols(self.field, tgt_dim, cols)

    def right_mult_matrix(self, u, degree, top_vertex):
        """Matrix of w -> w*u on e_top A_degree e_{u.target} -> e_top A_{degree+deg u} e_{u.source}."""
        src_piece = self.piece(degree, u.target, top_vertex)
        tgt_dim = self.dim_piece(degree + u.degree, u.source, top_vertex)
        cols = []
        for p in src_piece.rep_paths:
            w = self.element_from_path(p)
            cols.append(list(self.multiply(w, u).coeffs))
        return Matrix.from_cols(self.field, tgt_dim, cols)

    # -- opposite algebra ------------------------------------------------

    def opposite(self):
        if self._opp is None:
            oq = self.quiver.opposite()
            opp = GradedAlgebra(oq, self.field,
                                [Relation(r.opposite_terms(oq)) for r in self.relations])
            opp._opp = self
            self._opp = opp
        return self._opp

    def element_opposite(self, u):
        """Translate u in this algebra to u-degree-preserving image in the opposite."""
        if u.algebra is not self:
            raise InputError("element of a different algebra")
        opp = self.opposite()
        piece = self.piece(u.degree, u.source, u.target)
        terms = []
        for c, p in zip(u.coeffs, piece.rep_paths):
            if c:
                terms.append((c, opp.quiver.path_from_names(tuple(reversed(p.names())),
                                                            vertex=p.vertex)))
        if not terms:
            return opp.zero_element(u.degree, u.target, u.source)
        return opp.element_from_terms(terms)

    # -- boundedness -----------------------------------------------------

    def column_dim(self, degree, gen_vertex):
        """dim of (A e_gen)_degree: all pieces with source gen_vertex."""
        return sum(self.dim_piece(degree, gen_vertex, y) for y in self.quiver.vertices)

    def row_dim(self, degree, top_vertex):
        """dim of (e_top A)_degree: all pieces with target top_vertex."""
        return sum(self.dim_piece(degree, x, top_vertex) for x in self.quiver.vertices)

    def _side_boundedness(self, cap, dim_at):
        per_vertex = {}
        all_finite = True
        for v in self.quiver.vertices:
            profile = []
            vanish = None
            for d in range(1, cap + 1):
                n = dim_at(d, v)
                profile.append(n)
                if n == 0:
                    # A_{i+1} = A_1 * A_i for a quiver algebra, so one empty
                    # degree kills all higher ones
                    vanish = d
                    break
            if vanish is None:
                all_finite = False
                per_vertex[v] = {"status": "unbounded-at-cap", "profile": profile}
            else:
                total = 1 + sum(profile)
                per_vertex[v] = {"status": "finite", "total_dim": total,
                                 "vanishes_at": vanish}
        status = "finite" if all_finite else "unbounded-at-cap"
        result = {"status": status, "per_vertex": per_vertex}
        if all_finite:
            result["total_dim"] = sum(pv["total_dim"] for pv in per_vertex.values())
        return result

    def boundedness(self, degree_cap):
        """Left/right boundedness certified up to a degree cap.

        Finiteness of A e_x (resp. e_x A) is certified exactly when some
        degree piece vanishes at degree <= cap; otherwise the side is
        reported unbounded-at-cap with the witness dimension profile.
        """
        if degree_cap < 1:
            raise InputError("degree cap must be >= 1")
        return {
            "left": self._side_boundedness(degree_cap, self.column_dim),
            "right": self._side_boundedness(degree_cap, self.row_dim),
        }

    def __repr__(self):
        return (f"GradedAlgebra({self.quiver!r}, {self.field.tag}, "
                f"{len(self.relations)} relations)")
