"""Modules as finite-dimensional representations, morphisms, constructors.

A module over an algebra A = k[x1..xn]/I is a k-space with one action
matrix per variable; the matrices commute and satisfy the ideal
relations.  Every constructor below returns a fully validated Module.
"""

from __future__ import annotations

import itertools
import random
from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import Algebra, Element
from .groebner import QuotientPresentation
from .linalg import (
    Matrix,
    image_basis,
    inverse,
    is_invertible,
    kernel_basis,
    rank,
    rref,
    solve_matrix,
    subspace_equal,
)
from .poly import Polynomial

__all__ = [
    "Module",
    "Morphism",
    "HomModule",
    "TensorModule",
    "Iso",
    "NotIso",
    "Unknown",
    "regular_module",
    "free_module",
    "zero_module",
    "residue_field_module",
    "element_action",
    "annihilator_submodule",
    "scale_quotient",
    "hom_module",
    "tensor_module",
    "dual_k",
    "direct_sum",
    "submodule_generated",
    "quotient_algebra",
    "transport_to_quotient",
    "transport_from_quotient",
    "is_isomorphic",
]


class Module:
    __slots__ = ("algebra", "dim", "actions", "label", "_mon_cache")

    def __init__(self, algebra: Algebra, actions: list, label: str = "", _validate=True):
        self.algebra = algebra
        self.actions = tuple(actions)
        self.dim = actions[0].rows if actions else 0
        self.label = label
        self._mon_cache = {}
        if algebra.nvars != len(self.actions):
            raise ValueError("need one action matrix per variable")
        if _validate:
            self._check_representation()

    def _check_representation(self):
        n = self.dim
        for a in self.actions:
            if a.rows != n or a.cols != n:
                raise ValueError("action matrices must be square of the module dimension")
        for i in range(len(self.actions)):
            for j in range(i + 1, len(self.actions)):
                if self.actions[i] @ self.actions[j] != self.actions[j] @ self.actions[i]:
                    raise ValueError("variable actions do not commute")
        for g in self.algebra.presentation.ideal_generators:
            if not self._evaluate_poly(g).is_zero():
                raise ValueError("an ideal generator does not vanish on the actions")

    def _evaluate_poly(self, f: Polynomial) -> Matrix:
        field = self.algebra.field
        acc = Matrix.zeros(field, self.dim, self.dim).data.copy()
        for m, c in f.terms:
            acc = acc + self.monomial_action(m).data * c
        if field.p is not None:
            acc = acc % field.p
        return Matrix(field, acc)

    def monomial_action(self, m) -> Matrix:
        m = tuple(m)
        cached = self._mon_cache.get(m)
        if cached is not None:
            return cached
        out = Matrix.identity(self.algebra.field, self.dim)
        for v, e in enumerate(m):
            for _ in range(e):
                out = self.actions[v] @ out
        self._mon_cache[m] = out
        return out

    def element_action(self, r: Element) -> Matrix:
        """Action matrix of an algebra element (staircase coordinates)."""
        if r.parent != self.algebra:
            raise ValueError("element belongs to a different algebra")
        field = self.algebra.field
        acc = Matrix.zeros(field, self.dim, self.dim).data.copy()
        for i, m in enumerate(self.algebra.staircase):
            c = r.coords.data[i, 0]
            if c != 0:
                acc = acc + self.monomial_action(m).data * c
        if field.p is not None:
            acc = acc % field.p
        return Matrix(field, acc)

    def radical_subspace(self) -> Matrix:
        """Basis columns of rad(A)·M = sum of variable images."""
        if not self.actions or self.dim == 0:
            return Matrix.zeros(self.algebra.field, self.dim, 0)
        stacked = Matrix.hstack([a for a in self.actions])
        return image_basis(stacked)

    def socle_dim(self) -> int:
        """dim of the simultaneous kernel of all variable actions."""
        if not self.actions:
            return self.dim
        stacked = Matrix.vstack([a for a in self.actions])
        return kernel_basis(stacked).cols

    def radical_layer_dims(self) -> tuple:
        """dims of M, rad·M, rad²·M, ... down to zero."""
        dims = [self.dim]
        basis = Matrix.identity(self.algebra.field, self.dim)
        while dims[-1] > 0:
            images = [a @ basis for a in self.actions]
            basis = image_basis(Matrix.hstack(images))
            dims.append(basis.cols)
        return tuple(dims)

    def __repr__(self):
        tag = f" {self.label!r}" if self.label else ""
        return f"Module(dim={self.dim}{tag} over {self.algebra!r})"


@dataclass(frozen=True)
class Morphism:
    source: Module
    target: Module
    matrix: Matrix

    def __post_init__(self):
        if self.matrix.rows != self.target.dim or self.matrix.cols != self.source.dim:
            raise ValueError("morphism matrix has the wrong shape")
        for sa, ta in zip(self.source.actions, self.target.actions):
            if self.matrix @ sa != ta @ self.matrix:
                raise ValueError("matrix does not commute with the actions")

    def is_isomorphism(self) -> bool:
        return is_invertible(self.matrix)

    def compose(self, other: "Morphism") -> "Morphism":
        """self after other."""
        return Morphism(other.source, self.target, self.matrix @ other.matrix)


# ---------------------------------------------------------------------------
# basic constructors


def regular_module(algebra: Algebra, label: str = "") -> Module:
    return Module(algebra, list(algebra.var_action), label=label or "A")


def free_module(algebra: Algebra, n: int, label: str = "") -> Module:
    acts = [
        Matrix.block_diag([a] * n) if n else Matrix.zeros(algebra.field, 0, 0)
        for a in algebra.var_action
    ]
    return Module(algebra, acts, label=label or f"A^{n}")


def zero_module(algebra: Algebra) -> Module:
    acts = [Matrix.zeros(algebra.field, 0, 0) for _ in range(algebra.nvars)]
    return Module(algebra, acts, label="0")


def residue_field_module(algebra: Algebra) -> Module:
    acts = [Matrix.zeros(algebra.field, 1, 1) for _ in range(algebra.nvars)]
    return Module(algebra, acts, label="k")


def element_action(module: Module, r: Element) -> Matrix:
    return module.element_action(r)


# ---------------------------------------------------------------------------
# sub/quotient constructions


def _restricted_actions(module: Module, basis: Matrix) -> list:
    """Actions in the coordinates of an invariant subspace basis."""
    acts = []
    for a in module.actions:
        img = a @ basis
        coords = solve_matrix(basis, img)
        if coords is None:
            raise ValueError("subspace is not invariant under the actions")
        acts.append(coords)
    return acts


def _quotient_data(module: Module, sub_basis: Matrix):
    """Projection P, section S and induced actions for M / span(sub_basis)."""
    field = module.algebra.field
    n = module.dim
    w = image_basis(sub_basis)
    res = rref(Matrix.hstack([w, Matrix.identity(field, n)]))
    # pivots beyond the w-block pick complementary standard basis vectors
    comp = [c - w.cols for c in res.pivot_columns if c >= w.cols]
    section = Matrix.zeros(field, n, len(comp)).data.copy()
    for k, j in enumerate(comp):
        section[j, k] = field.one
    section_m = Matrix(field, section)
    # projection: coordinates of each standard vector modulo w in the comp basis
    sol = solve_matrix(Matrix.hstack([w, section_m]), Matrix.identity(field, n))
    proj = Matrix(field, np.ascontiguousarray(sol.data[w.cols :, :]))
    acts = [proj @ a @ section_m for a in module.actions]
    return proj, section_m, acts


def annihilator_submodule(module: Module, x: Element):
    """(0:_M x) with its inclusion into M."""
    ax = module.element_action(x)
    basis = kernel_basis(ax)
    acts = _restricted_actions(module, basis)
    sub = Module(module.algebra, acts, label=f"ann({module.label or 'M'})")
    return sub, Morphism(sub, module, basis)


def scale_quotient(module: Module, x: Element):
    """M/xM with the projection from M."""
    ax = module.element_action(x)
    proj, _section, acts = _quotient_data(module, ax)
    quot = Module(module.algebra, acts, label=f"{module.label or 'M'}/x")
    return quot, Morphism(module, quot, proj)


def submodule_generated(module: Module, vectors: Matrix):
    """Smallest action-closed subspace containing the given column vectors."""
    basis = image_basis(vectors)
    while True:
        images = [a @ basis for a in module.actions]
        bigger = image_basis(Matrix.hstack([basis] + images))
        if bigger.cols == basis.cols:
            break
        basis = bigger
    acts = _restricted_actions(module, basis)
    sub = Module(module.algebra, acts, label="submodule")
    return sub, Morphism(sub, module, basis)


def direct_sum(m: Module, n: Module, label: str = "") -> Module:
    if m.algebra != n.algebra:
        raise ValueError("direct sum requires the same algebra")
    acts = [Matrix.block_diag([a, b]) for a, b in zip(m.actions, n.actions)]
    return Module(m.algebra, acts, label=label or f"{m.label}(+){n.label}")


# ---------------------------------------------------------------------------
# Hom, tensor, duality


class HomModule(Module):
    """Hom_A(M, N) as an A-module; remembers its matrix basis."""

    __slots__ = ("hom_source", "hom_target", "basis")

    def __init__(self, source: Module, target: Module):
        if source.algebra != target.algebra:
            raise ValueError("Hom requires modules over the same algebra")
        field = source.algebra.field
        ns, nt = source.dim, target.dim
        # unknowns: nt x ns matrix entries, flattened row-major
        constraints = []
        for sa, ta in zip(source.actions, target.actions):
            # with row-major vec: T X - X S = (T (x) I - I (x) S^t) vec(X)
            lhs = _kron(field, _eye_arr(field, nt), sa.T.data)
            rhs = _kron(field, ta.data, _eye_arr(field, ns))
            constraints.append(Matrix(field, rhs) - Matrix(field, lhs))
        if constraints:
            stacked = Matrix.vstack(constraints)
        else:
            stacked = Matrix.zeros(field, 0, ns * nt)
        basis_vecs = kernel_basis(stacked)
        self.hom_source = source
        self.hom_target = target
        self.basis = [
            Matrix(field, np.ascontiguousarray(basis_vecs.data[:, k].reshape(nt, ns)))
            for k in range(basis_vecs.cols)
        ]
        acts = []
        bmat = basis_vecs  # (ns*nt) x h, columns are vec(phi)
        for ta in target.actions:
            imgs = []
            for phi in self.basis:
                img = ta @ phi
                imgs.append(img.data.reshape(ns * nt, 1))
            if imgs:
                img_m = Matrix(field, np.hstack(imgs))
                coords = solve_matrix(bmat, img_m)
            else:
                coords = Matrix.zeros(field, 0, 0)
            acts.append(coords)
        super().__init__(
            source.algebra,
            acts,
            label=f"Hom({source.label or 'M'},{target.label or 'N'})",
        )

    def element_matrix(self, coords: Matrix) -> Matrix:
        """The hom as a target-dim x source-dim matrix, from coordinates."""
        field = self.algebra.field
        acc = Matrix.zeros(field, self.hom_target.dim, self.hom_source.dim).data.copy()
        for k, phi in enumerate(self.basis):
            c = coords.data[k, 0]
            if c != 0:
                acc = acc + phi.data * c
        if field.p is not None:
            acc = acc % field.p
        return Matrix(field, acc)

    def coordinates_of(self, mat: Matrix) -> Matrix:
        """Inverse of element_matrix; the hom must lie in the span."""
        field = self.algebra.field
        if not self.basis:
            if mat.is_zero():
                return Matrix.zeros(field, 0, 1)
            raise ValueError("matrix is not in the Hom space")
        bmat = Matrix(
            field, np.hstack([phi.data.reshape(-1, 1) for phi in self.basis])
        )
        coords = solve_matrix(bmat, Matrix(field, mat.data.reshape(-1, 1)))
        if coords is None:
            raise ValueError("matrix is not in the Hom space")
        return coords


def _eye_arr(field, n):
    return Matrix.identity(field, n).data


def _kron(field, a, b):
    out = np.kron(a, b)
    if field.p is not None:
        out = out % field.p
    return out


def hom_module(source: Module, target: Module) -> HomModule:
    return HomModule(source, target)


class TensorModule(Module):
    """M (x)_A N; remembers the projection from and section into M (x)_k N."""

    __slots__ = ("left", "right", "projection", "section")

    def __init__(self, left: Module, right: Module):
        if left.algebra != right.algebra:
            raise ValueError("tensor requires modules over the same algebra")
        field = left.algebra.field
        nl, nr = left.dim, right.dim
        # relation subspace: (a·m)(x)n - m(x)(a·n) over variable generators
        rels = []
        for la, ra in zip(left.actions, right.actions):
            diff = Matrix(field, _kron(field, la.data, _eye_arr(field, nr))) - Matrix(
                field, _kron(field, _eye_arr(field, nl), ra.data)
            )
            rels.append(diff)
        big = (
            Matrix.hstack(rels) if rels else Matrix.zeros(field, nl * nr, 0)
        )
        full_actions = [
            Matrix(field, _kron(field, la.data, _eye_arr(field, nr)))
            for la in left.actions
        ]
        proj, section, acts = _quotient_space(field, nl * nr, big, full_actions)
        self.left = left
        self.right = right
        self.projection = proj
        self.section = section
        super().__init__(
            left.algebra,
            acts,
            label=f"{left.label or 'M'}(x){right.label or 'N'}",
        )

    def pure_tensor(self, u: Matrix, v: Matrix) -> Matrix:
        """Image of u (x) v in the quotient coordinates."""
        field = self.algebra.field
        vec = _kron(field, u.data, v.data)
        return self.projection @ Matrix(field, vec)


def _quotient_space(field, n, sub: Matrix, action_mats: list):
    """Quotient of k^n by the span of sub's columns, with induced actions."""
    w = image_basis(sub)
    res = rref(Matrix.hstack([w, Matrix.identity(field, n)]))
    comp = [c - w.cols for c in res.pivot_columns if c >= w.cols]
    section = Matrix.zeros(field, n, len(comp)).data.copy()
    for k, j in enumerate(comp):
        section[j, k] = field.one
    section_m = Matrix(field, section)
    sol = solve_matrix(Matrix.hstack([w, section_m]), Matrix.identity(field, n))
    proj = Matrix(field, np.ascontiguousarray(sol.data[w.cols :, :]))
    acts = [proj @ a @ section_m for a in action_mats]
    return proj, section_m, acts


def tensor_module(left: Module, right: Module) -> TensorModule:
    return TensorModule(left, right)


def dual_k(module: Module, label: str = "") -> Module:
    """Contragredient: transpose actions on the k-dual space."""
    acts = [a.T for a in module.actions]
    return Module(module.algebra, acts, label=label or f"dual({module.label or 'M'})")


# ---------------------------------------------------------------------------
# base change along A -> A/xA


def quotient_algebra(algebra: Algebra, x: Element) -> Algebra:
    """A/xA: adjoin the polynomial form of x to the ideal."""
    if x.is_zero():
        raise ValueError("cannot quotient by zero")
    coords = x.coords
    if coords.data[0, 0] != 0:
        raise ValueError("cannot quotient by a unit (nonzero constant term)")
    f = x.to_polynomial()
    pres = algebra.presentation
    new_pres = QuotientPresentation(pres.ring, list(pres.ideal_generators) + [f])
    return Algebra(new_pres)


def transport_to_quotient(module: Module, quotient: Algebra, x: Element) -> Module:
    """View a module killed by x as a module over A/xA."""
    if not module.element_action(x).is_zero():
        raise ValueError("module is not killed by x; cannot transport")
    return Module(quotient, list(module.actions), label=module.label)


def transport_from_quotient(module: Module, algebra: Algebra) -> Module:
    """View an A/xA-module as an A-module (restriction along A -> A/xA)."""
    return Module(algebra, list(module.actions), label=module.label)


# ---------------------------------------------------------------------------
# isomorphism testing


@dataclass(frozen=True)
class Iso:
    witness: Morphism


@dataclass(frozen=True)
class NotIso:
    reason: str


@dataclass(frozen=True)
class Unknown:
    reason: str


DEFAULT_ISO_BUDGET = 32
_EXHAUSTIVE_CAP = 4096


def is_isomorphic(m: Module, n: Module, seed: int = 0, budget: int = DEFAULT_ISO_BUDGET):
    """Decide M ≅ N: cheap invariants first, then seeded random combinations
    of a Hom-space basis, with exhaustive enumeration when the Hom space is
    small enough; otherwise Unknown."""
    if m.algebra != n.algebra:
        raise ValueError("modules over different algebras")
    if m.dim != n.dim:
        return NotIso(f"dims differ: {m.dim} vs {n.dim}")
    if m.dim == 0:
        return Iso(Morphism(m, n, Matrix.zeros(m.algebra.field, 0, 0)))
    if m.radical_layer_dims() != n.radical_layer_dims():
        return NotIso(
            f"radical layer dims differ: {m.radical_layer_dims()} vs {n.radical_layer_dims()}"
        )
    if m.socle_dim() != n.socle_dim():
        return NotIso(f"socle dims differ: {m.socle_dim()} vs {n.socle_dim()}")
    hom_mn = hom_module(m, n)
    hom_nm = hom_module(n, m)
    if hom_mn.dim != hom_nm.dim:
        return NotIso(
            f"Hom dims differ: dim Hom(M,N)={hom_mn.dim}, dim Hom(N,M)={hom_nm.dim}"
        )
    h = len(hom_mn.basis)
    if h == 0:
        return NotIso("Hom(M,N) = 0 with M nonzero")
    field = m.algebra.field

    def as_morphism(mat):
        return Iso(Morphism(m, n, mat))

    if field.p is not None and field.p ** h <= _EXHAUSTIVE_CAP:
        for coeffs in itertools.product(range(field.p), repeat=h):
            mat = _combine(field, hom_mn.basis, coeffs)
            if is_invertible(mat):
                return as_morphism(mat)
        return NotIso("no invertible element in Hom(M,N) (exhaustive)")
    rng = random.Random(seed)
    for _ in range(budget):
        if field.p is not None:
            coeffs = [rng.randrange(field.p) for _ in range(h)]
        else:
            coeffs = [rng.randint(-5, 5) for _ in range(h)]
        mat = _combine(field, hom_mn.basis, coeffs)
        if is_invertible(mat):
            return as_morphism(mat)
    return Unknown(f"no invertible combination found in {budget} seeded trials")


def _combine(field, basis, coeffs):
    acc = basis[0].data * field.canon(coeffs[0])
    for phi, c in zip(basis[1:], coeffs[1:]):
        acc = acc + phi.data * field.canon(c)
    if field.p is not None:
        acc = acc % field.p
    return Matrix(field, acc)
