"""Minimal free resolutions, truncated Ext/Tor, pd/id bounds, periodicity.

Resolutions are built incrementally and cached per module.  Differentials
are stored in algebra-entry form (a b_{i-1} x b_i matrix of algebra
coordinate vectors), which makes Hom(F_i, N) and F_i (x) N complexes
cheap block constructions.

Ext and Tor each have two routes: through a free resolution of the first
argument, and through a free resolution of the k-dual of the other side
(over a finite-dimensional algebra, k-duality turns injective
coresolutions into projective resolutions).  Routes are tried with an
escalating size budget, so a module whose Betti numbers explode falls
back to the dual route instead of stalling.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

import numpy as np

from .algebra import Algebra
from .linalg import Matrix, image_basis, kernel_basis, rank, rref
from .module import Iso, Module, Morphism, dual_k, free_module, is_isomorphic

__all__ = [
    "ResolutionBudgetExceeded",
    "FreeResolution",
    "minimal_free_resolution",
    "ExtTable",
    "TorTable",
    "ext",
    "tor",
    "Exactly",
    "AtLeast",
    "NEG_INF",
    "pd_bounded",
    "id_bounded",
    "syzygy_periodicity",
]

DEFAULT_RESOLUTION_BUDGET = 10_000
ROUTE_BUDGETS = (1500, DEFAULT_RESOLUTION_BUDGET)


class ResolutionBudgetExceeded(Exception):
    """Total resolution dimension passed the growth cutoff."""


class _NegInf:
    """Sentinel ordered below every number (homological dim of the zero module)."""

    def __lt__(self, other):
        return not isinstance(other, _NegInf)

    def __le__(self, other):
        return True

    def __gt__(self, other):
        return False

    def __ge__(self, other):
        return isinstance(other, _NegInf)

    def __eq__(self, other):
        return isinstance(other, _NegInf)

    def __hash__(self):
        return hash("-inf")

    def __repr__(self):
        return "-inf"


NEG_INF = _NegInf()


def _act_from_coords(mon_stack, coords, field):
    """sum_i coords[i] * mon_stack[i] as a raw array."""
    acc = None
    for i in range(len(mon_stack)):
        c = coords[i]
        if c != 0:
            term = mon_stack[i].data * c
            acc = term if acc is None else acc + term
    if acc is None:
        n = mon_stack[0].rows
        return Matrix.zeros(field, n, n).data
    if field.p is not None:
        acc = acc % field.p
    return acc


def _mon_stack(module: Module):
    return [module.monomial_action(m) for m in module.algebra.staircase]


def _free_var_apply(var_mat: Matrix, v: np.ndarray, rank_: int, d: int, field):
    """Apply the block-diagonal action (rank_ copies of var_mat) to columns v."""
    out = np.empty_like(np.asarray(v))
    a = var_mat.data
    for r in range(rank_):
        out[r * d : (r + 1) * d] = a.dot(v[r * d : (r + 1) * d])
    if field.p is not None:
        out = out % field.p
    return out


class _ResolutionState:
    """Incremental minimal free resolution of one module."""

    def __init__(self, module: Module):
        self.module = module
        self.algebra = module.algebra
        self.field = module.algebra.field
        self.betti: list[int] = []
        self.gens: list[Matrix] = []
        self.diff_alg: list = [None]  # diff_alg[i] for i >= 1
        self.kernels: list[Optional[Matrix]] = [None]  # kernels[i] = ker d_{i-1} in F_{i-1}
        self.terminated = False
        self.cum_dim = 0
        self._mult_stack = [m.data for m in self.algebra.mult]
        self._next_kernel: Optional[Matrix] = None
        self._step0()

    # -- construction --------------------------------------------------
    def _min_gens_from_kernel(self, kernel: Matrix, rad_images: Matrix) -> Matrix:
        """Columns of ``kernel`` completing a basis of kernel/rad·kernel."""
        rad = image_basis(rad_images)
        res = rref(Matrix.hstack([rad, kernel]))
        picks = [c - rad.cols for c in res.pivot_columns if c >= rad.cols]
        if not picks:
            return Matrix.zeros(self.field, kernel.rows, 0)
        return Matrix(self.field, np.hstack([kernel.data[:, [c]] for c in picks]))

    def _step0(self):
        m = self.module
        rad = m.radical_subspace()
        full = Matrix.identity(self.field, m.dim)
        g0 = self._min_gens_from_kernel(full, rad)
        b0 = g0.cols
        self.betti.append(b0)
        self.gens.append(g0)
        self.cum_dim = b0 * self.algebra.dim
        mon = _mon_stack(m)
        d = self.algebra.dim
        if b0 == 0:
            self.terminated = True
            self._next_kernel = None
            return
        cols = []
        for j in range(b0):
            gj = g0.data[:, [j]]
            cols.append(np.hstack([mi.data.dot(gj) for mi in mon]))
        d0 = np.hstack(cols)
        if self.field.p is not None:
            d0 = d0 % self.field.p
        self._d0 = Matrix(self.field, d0)
        self._next_kernel = kernel_basis(self._d0)

    @property
    def length(self) -> int:
        return len(self.betti) - 1

    def ensure(self, target_len: int, max_total_dim: int):
        if self.cum_dim > max_total_dim:
            raise ResolutionBudgetExceeded(
                f"resolution of {self.module.label or 'module'} already at "
                f"{self.cum_dim} total dims (> {max_total_dim})"
            )
        while not self.terminated and self.length < target_len:
            self._step(max_total_dim)

    def _step(self, max_total_dim: int):
        d = self.algebra.dim
        kernel = self._next_kernel
        prev_rank = self.betti[-1]
        if kernel.cols == 0:
            self.terminated = True
            self._next_kernel = None
            return
        self.kernels.append(kernel)
        rad_imgs = []
        for va in self.algebra.var_action:
            rad_imgs.append(
                Matrix(
                    self.field,
                    _free_var_apply(va, kernel.data, prev_rank, d, self.field),
                )
            )
        gens = self._min_gens_from_kernel(kernel, Matrix.hstack(rad_imgs))
        b = gens.cols
        self.cum_dim += b * d
        if self.cum_dim > max_total_dim:
            # roll back so a later call with a larger budget can retry this step
            self.cum_dim -= b * d
            self.kernels.pop()
            raise ResolutionBudgetExceeded(
                f"resolution of {self.module.label or 'module'} exceeds "
                f"{max_total_dim} total dims at step {self.length + 1}"
            )
        # algebra-entry form of the new differential + minimality check
        entries = []
        for t in range(prev_rank):
            row = []
            for j in range(b):
                coords = np.asarray(gens.data[t * d : (t + 1) * d, j]).reshape(-1)
                if coords[0] != 0:
                    raise AssertionError("non-minimal differential entry (unit constant term)")
                row.append(coords)
            entries.append(row)
        self.betti.append(b)
        self.gens.append(gens)
        self.diff_alg.append(entries)
        # k-linear differential F_new -> F_prev and its kernel
        dk = self._alg_entry_matrix(entries, prev_rank, b)
        self._next_kernel = kernel_basis(dk)

    def _alg_entry_matrix(self, entries, nrows_blocks, ncols_blocks) -> Matrix:
        """Blocks = regular-representation matrices of the algebra entries."""
        d = self.algebra.dim
        if self.field.p is not None:
            out = np.zeros((nrows_blocks * d, ncols_blocks * d), dtype=np.int64)
        else:
            out = Matrix.zeros(self.field, nrows_blocks * d, ncols_blocks * d).data.copy()
        for t in range(nrows_blocks):
            for j in range(ncols_blocks):
                coords = entries[t][j]
                blk = None
                for i, c in enumerate(coords):
                    if c != 0:
                        term = self._mult_stack[i] * c
                        blk = term if blk is None else blk + term
                if blk is not None:
                    if self.field.p is not None:
                        blk = blk % self.field.p
                    out[t * d : (t + 1) * d, j * d : (j + 1) * d] = blk
        return Matrix(self.field, out)

    def differential_matrix(self, i: int) -> Matrix:
        """k-linear d_i; i = 0 maps F_0 onto the module."""
        if i == 0:
            return self._d0
        entries = self.diff_alg[i]
        return self._alg_entry_matrix(entries, self.betti[i - 1], self.betti[i])


_RES_CACHE: dict = {}


def _state_for(module: Module) -> _ResolutionState:
    key = id(module)
    hit = _RES_CACHE.get(key)
    if hit is not None and hit[0] is module:
        return hit[1]
    st = _ResolutionState(module)
    _RES_CACHE[key] = (module, st)
    return st


@dataclass
class FreeResolution:
    """A truncated minimal free resolution (a view of the cached state)."""

    module: Module
    betti: list
    terminated: bool
    _state: _ResolutionState

    @property
    def length(self) -> int:
        return len(self.betti) - 1

    def differential_matrix(self, i: int) -> Matrix:
        return self._state.differential_matrix(i)

    def diff_alg(self, i: int):
        return self._state.diff_alg[i]

    def free_rank(self, i: int) -> int:
        return self.betti[i] if i < len(self.betti) else 0

    def free_module(self, i: int) -> Module:
        return free_module(self.module.algebra, self.free_rank(i))

    def kernel_basis_at(self, i: int) -> Matrix:
        """Basis of the i-th syzygy inside F_{i-1} (i >= 1)."""
        return self._state.kernels[i]


def minimal_free_resolution(
    module: Module, bound: int, max_total_dim: int = DEFAULT_RESOLUTION_BUDGET
) -> FreeResolution:
    st = _state_for(module)
    st.ensure(bound, max_total_dim)
    upto = min(st.length, bound)
    return FreeResolution(
        module,
        list(st.betti[: upto + 1]),
        st.terminated and st.length <= bound,
        st,
    )


# ---------------------------------------------------------------------------
# Ext and Tor tables


@dataclass(frozen=True)
class ExtTable:
    dims: tuple
    bound: int
    certified_all_beyond: bool
    route: str

    def entry(self, i: int) -> int:
        return self.dims[i]

    def vanishes_above(self, n: int) -> bool:
        ok = all(d == 0 for d in self.dims[n + 1 :])
        return ok

    def last_nonzero(self):
        nz = [i for i, d in enumerate(self.dims) if d != 0]
        return nz[-1] if nz else None


TorTable = ExtTable


def _block_map(res: FreeResolution, other: Module, i: int, transpose: bool) -> Matrix:
    """The i-th differential of Hom(F_., other) (transpose=True) or of
    F_. (x) other (transpose=False), as one block matrix."""
    field = other.algebra.field
    nN = other.dim
    entries = res.diff_alg(i)
    b_prev = res.betti[i - 1]
    b_cur = res.betti[i]
    mon = _mon_stack(other)
    if transpose:
        nrows, ncols = b_cur, b_prev
    else:
        nrows, ncols = b_prev, b_cur
    if field.p is not None:
        out = np.zeros((nrows * nN, ncols * nN), dtype=np.int64)
    else:
        out = Matrix.zeros(field, nrows * nN, ncols * nN).data.copy()
    for t in range(b_prev):
        for j in range(b_cur):
            blk = _act_from_coords(mon, entries[t][j], field)
            if transpose:
                out[j * nN : (j + 1) * nN, t * nN : (t + 1) * nN] = blk
            else:
                out[t * nN : (t + 1) * nN, j * nN : (j + 1) * nN] = blk
    return Matrix(field, out)


def _hom_complex_dims(res: FreeResolution, other: Module, bound: int) -> tuple:
    """Cohomology dims of Hom(F_., other) in degrees 0..bound."""
    nN = other.dim
    L = res.length
    maps = {}
    for i in range(1, min(L, bound + 1) + 1):
        maps[i] = _block_map(res, other, i, transpose=True)
    dims = []
    for i in range(bound + 1):
        if i > L:
            dims.append(0)
            continue
        dom = res.betti[i] * nN
        if (i + 1) in maps:
            ker = kernel_basis(maps[i + 1]).cols
        else:
            ker = dom  # next map is zero
        prev_rank = rank(maps[i]) if i >= 1 else 0
        dims.append(ker - prev_rank)
    return tuple(dims)


def _tensor_complex_dims(res: FreeResolution, other: Module, bound: int) -> tuple:
    """Homology dims of F_. (x) other in degrees 0..bound."""
    nN = other.dim
    L = res.length
    maps = {}
    for i in range(1, min(L, bound + 1) + 1):
        maps[i] = _block_map(res, other, i, transpose=False)
    dims = []
    for i in range(bound + 1):
        if i > L:
            dims.append(0)
            continue
        dom = res.betti[i] * nN
        ker = kernel_basis(maps[i]).cols if i >= 1 else dom
        nxt = rank(maps[i + 1]) if (i + 1) in maps else 0
        dims.append(ker - nxt)
    return tuple(dims)


def ext(
    m: Module,
    n: Module,
    bound: int,
    budgets=ROUTE_BUDGETS,
    route: Optional[str] = None,
) -> ExtTable:
    """dim_k Ext^i(M, N) for 0 <= i <= bound.

    Route "projective" resolves M; route "injective" resolves dual_k(N)
    and uses Ext^i(M, N) = Tor_i(dual_k(N), M).  Default: escalate.
    """
    if m.algebra != n.algebra:
        raise ValueError("Ext requires modules over the same algebra")
    attempts = _route_plan(route, budgets, ("projective", "injective"))
    last_err = None
    for rt, budget in attempts:
        try:
            if rt == "projective":
                res = minimal_free_resolution(m, bound + 1, budget)
                dims = _hom_complex_dims(res, n, bound)
            else:
                dn = dual_k(n)
                res = minimal_free_resolution(dn, bound + 1, budget)
                dims = _tensor_complex_dims(res, m, bound)
            return ExtTable(dims, bound, res.terminated, rt)
        except ResolutionBudgetExceeded as e:
            last_err = e
    raise last_err


def tor(
    m: Module,
    n: Module,
    bound: int,
    budgets=ROUTE_BUDGETS,
    route: Optional[str] = None,
) -> TorTable:
    """dim_k Tor_i(M, N) for 0 <= i <= bound; resolves M or N, whichever fits."""
    if m.algebra != n.algebra:
        raise ValueError("Tor requires modules over the same algebra")
    attempts = _route_plan(route, budgets, ("left", "right"))
    last_err = None
    for rt, budget in attempts:
        try:
            if rt == "left":
                res = minimal_free_resolution(m, bound + 1, budget)
                dims = _tensor_complex_dims(res, n, bound)
            else:
                res = minimal_free_resolution(n, bound + 1, budget)
                dims = _tensor_complex_dims(res, m, bound)
            return TorTable(dims, bound, res.terminated, rt)
        except ResolutionBudgetExceeded as e:
            last_err = e
    raise last_err


def _route_plan(route, budgets, names):
    if route is not None:
        return [(route, budgets[-1])]
    plan = []
    for b in budgets:
        for nm in names:
            plan.append((nm, b))
    return plan


# ---------------------------------------------------------------------------
# dimension verdicts


@dataclass(frozen=True)
class Exactly:
    value: object  # int or NEG_INF

    def __repr__(self):
        return f"Exactly({self.value})"


@dataclass(frozen=True)
class AtLeast:
    value: int

    def __repr__(self):
        return f"AtLeast({self.value})"


def pd_bounded(module: Module, bound: int, max_total_dim: int = DEFAULT_RESOLUTION_BUDGET):
    """Exactly(n) iff the minimal resolution terminates at n within bound."""
    if module.dim == 0:
        return Exactly(NEG_INF)
    res = minimal_free_resolution(module, bound, max_total_dim)
    if res.terminated:
        return Exactly(res.length)
    return AtLeast(bound + 1)


def id_bounded(module: Module, bound: int, max_total_dim: int = DEFAULT_RESOLUTION_BUDGET):
    """Injective dimension via exact k-duality: id(M) = pd(dual_k(M))."""
    if module.dim == 0:
        return Exactly(NEG_INF)
    return pd_bounded(dual_k(module), bound, max_total_dim)


# ---------------------------------------------------------------------------
# syzygy periodicity certificates


def syzygy_module(module: Module, i: int, max_total_dim: int = DEFAULT_RESOLUTION_BUDGET) -> Module:
    """The i-th syzygy (i >= 1) as a validated Module."""
    res = minimal_free_resolution(module, i, max_total_dim)
    if res.length < i:
        acts = [Matrix.zeros(module.algebra.field, 0, 0) for _ in module.actions]
        return Module(module.algebra, acts, label=f"syz{i}")
    basis = res.kernel_basis_at(i)
    algebra = module.algebra
    d = algebra.dim
    prev_rank = res.betti[i - 1]
    from .linalg import solve_matrix

    acts = []
    for va in algebra.var_action:
        img = Matrix(
            algebra.field,
            _free_var_apply(va, basis.data, prev_rank, d, algebra.field),
        )
        coords = solve_matrix(basis, img)
        if coords is None:
            raise AssertionError("syzygy subspace not invariant")
        acts.append(coords)
    return Module(algebra, acts, label=f"syz{i}({module.label or 'M'})")


def syzygy_periodicity(
    module: Module,
    window: int,
    seed: int = 0,
    max_total_dim: int = DEFAULT_RESOLUTION_BUDGET,
):
    """First (i, j, witness) with syzygy_i ≅ syzygy_j, i < j <= window; None if
    the resolution terminates or no certificate is found in the window."""
    try:
        res = minimal_free_resolution(module, window, max_total_dim)
    except ResolutionBudgetExceeded:
        return None
    if res.terminated:
        return None
    syz = {}
    for i in range(1, res.length + 1):
        syz[i] = syzygy_module(module, i, max_total_dim)
    for i in range(1, res.length + 1):
        for j in range(i + 1, res.length + 1):
            if syz[i].dim != syz[j].dim:
                continue
            verdict = is_isomorphic(syz[i], syz[j], seed=seed)
            if isinstance(verdict, Iso):
                return (i, j, verdict.witness)
    return None
