"""Finite permutation groups with full element enumeration at desk scale.

Everything is index-based: a group enumerates its elements once (BFS over the
generators, identity first) and all structural computations work on integer
indices into that list.  Products ``a * b`` apply ``b`` first.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import reduce

import numpy as np

from . import kernels
from .errors import (
    BadParameters,
    CapExceeded,
    ElementNotInGroup,
    NotAPGroup,
    NotASubgroup,
    NotNormal,
)
from .numutil import factorint, lcm, p_part

DEFAULT_CAP = 200_000
DEGREE_CAP = 4096


class Perm:
    """Permutation of {0..degree-1}, stored as an image array."""

    __slots__ = ("images",)

    def __init__(self, images):
        arr = np.asarray(images, dtype=np.int32)
        if arr.ndim != 1:
            raise BadParameters("a permutation is a 1-d image array")
        if not np.array_equal(np.sort(arr), np.arange(arr.size, dtype=np.int32)):
            raise BadParameters(f"images {list(arr)} are not a bijection")
        arr = arr.copy()
        arr.setflags(write=False)
        self.images = arr

    @property
    def degree(self) -> int:
        return self.images.size

    def __mul__(self, other: "Perm") -> "Perm":
        return Perm(self.images[other.images])

    def inverse(self) -> "Perm":
        inv = np.empty_like(self.images)
        inv[self.images] = np.arange(self.degree, dtype=np.int32)
        return Perm(inv)

    def __pow__(self, k: int) -> "Perm":
        if k < 0:
            return self.inverse() ** (-k)
        result = Perm(np.arange(self.degree, dtype=np.int32))
        base = self
        while k:
            if k & 1:
                result = result * base
            base = base * base
            k >>= 1
        return result

    def order(self) -> int:
        return int(kernels.row_orders(self.images[None, :])[0])

    def is_identity(self) -> bool:
        return bool(np.array_equal(self.images, np.arange(self.degree)))

    def __eq__(self, other) -> bool:
        return isinstance(other, Perm) and np.array_equal(self.images, other.images)

    def __hash__(self) -> int:
        return hash(self.images.tobytes())

    def __repr__(self) -> str:
        return f"Perm({list(self.images)})"


def identity_perm(degree: int) -> Perm:
    return Perm(np.arange(degree, dtype=np.int32))


@dataclass
class ConjugacyClass:
    representative: Perm
    size: int
    element_order: int
    member_index: np.ndarray  # element indices, ascending


@dataclass
class SubgroupHandle:
    """A subgroup of ``parent`` given by generators plus its element indices."""

    parent: "Group"
    generators: list[Perm]
    indices: np.ndarray  # sorted element indices into parent
    _normal: bool | None = field(default=None, repr=False)
    _as_group: "Group | None" = field(default=None, repr=False)

    @property
    def order(self) -> int:
        return int(self.indices.size)

    @property
    def is_normal(self) -> bool:
        if self._normal is None:
            self._normal = self.parent._is_normal_set(self.indices, self.generators)
        return self._normal

    def mask(self) -> np.ndarray:
        m = np.zeros(self.parent.order, dtype=bool)
        m[self.indices] = True
        return m

    def contains_index(self, i: int) -> bool:
        pos = int(np.searchsorted(self.indices, i))
        return pos < self.indices.size and self.indices[pos] == i

    def contains(self, other: "SubgroupHandle") -> bool:
        return bool(np.all(np.isin(other.indices, self.indices)))

    def same_as(self, other: "SubgroupHandle") -> bool:
        # order + mutual generator membership; element-set compare past 10k
        if self.order != other.order:
            return False
        if self.order > 10_000:
            return bool(np.array_equal(self.indices, other.indices))
        return all(
            self.contains_index(self.parent.index_of(g)) for g in other.generators
        ) and all(other.contains_index(self.parent.index_of(g)) for g in self.generators)

    def as_group(self, name: str | None = None) -> "Group":
        """Standalone Group on the same points, re-enumerated from generators."""
        if self._as_group is None:
            gens = self.generators if self.generators else []
            self._as_group = Group(
                gens,
                degree=self.parent.degree,
                name=name or "subgroup",
                cap=self.parent.cap,
            )
            assert self._as_group.order == self.order
        return self._as_group


class Group:
    """Finite group of permutations with cached enumeration machinery."""

    def __init__(self, generators, degree: int | None = None,
                 name: str = "group", cap: int = DEFAULT_CAP):
        gen_perms = [g if isinstance(g, Perm) else Perm(g) for g in generators]
        if degree is None:
            if not gen_perms:
                raise BadParameters("degree required for a generator-free group")
            degree = gen_perms[0].degree
        if degree > DEGREE_CAP:
            raise BadParameters(f"degree {degree} exceeds the cap of {DEGREE_CAP}")
        for g in gen_perms:
            if g.degree != degree:
                raise BadParameters("generators have mismatched degrees")
        self.degree = int(degree)
        self.generators = gen_perms
        self.name = name
        self.cap = cap
        self._elements: np.ndarray | None = None
        self._index: tuple | None = None
        self._inverse: np.ndarray | None = None
        self._orders: np.ndarray | None = None
        self._classes: list[ConjugacyClass] | None = None
        self._class_of: np.ndarray | None = None
        self._center: SubgroupHandle | None = None
        self._normal_subgroups: list[SubgroupHandle] | None = None
        self._conj_maps: dict[bytes, np.ndarray] = {}

    # -- enumeration ------------------------------------------------------

    @property
    def elements(self) -> np.ndarray:
        if self._elements is None:
            gens = (
                np.array([g.images for g in self.generators], dtype=np.int32)
                if self.generators
                else np.empty((0, self.degree), dtype=np.int32)
            )
            self._elements = kernels.bfs_closure(gens, self.degree, self.cap)
        return self._elements

    @property
    def order(self) -> int:
        return int(self.elements.shape[0])

    def _index_data(self):
        if self._index is None:
            elems = self.elements
            base = _greedy_base(elems)
            keys = kernels.pack_keys(elems, base)
            perm = np.argsort(keys, kind="stable")
            self._index = (base, keys[perm], perm)
        return self._index

    def lookup(self, rows: np.ndarray) -> np.ndarray:
        """Indices of permutation rows (must belong to the group)."""
        base, skeys, perm = self._index_data()
        return kernels.lookup_rows(np.ascontiguousarray(rows, dtype=np.int32),
                                   base, skeys, perm)

    def index_of(self, p: Perm) -> int:
        idx = int(self.lookup(p.images[None, :])[0])
        if not np.array_equal(self.elements[idx], p.images):
            raise ElementNotInGroup(f"permutation not in group {self.name}")
        return idx

    def element(self, i: int) -> Perm:
        return Perm(self.elements[i])

    @property
    def inverse_index(self) -> np.ndarray:
        if self._inverse is None:
            elems = self.elements
            inv = np.empty_like(elems)
            rows = np.arange(elems.shape[0])[:, None]
            inv[rows, elems] = np.arange(self.degree, dtype=np.int32)[None, :]
            self._inverse = self.lookup(inv)
        return self._inverse

    @property
    def element_orders(self) -> np.ndarray:
        if self._orders is None:
            self._orders = kernels.row_orders(self.elements)
        return self._orders

    def exponent(self) -> int:
        return int(reduce(lcm, (int(o) for o in self.element_orders), 1))

    # -- index arithmetic --------------------------------------------------

    def mul_rows(self, idx: np.ndarray, g_images: np.ndarray) -> np.ndarray:
        """Indices of e_i * g for i in idx."""
        return self.lookup(self.elements[idx][:, g_images])

    def conj_map(self, g: Perm) -> np.ndarray:
        """index map i -> index of g * e_i * g^-1 (cached per permutation)."""
        key = g.images.tobytes()
        cached = self._conj_maps.get(key)
        if cached is None:
            ginv = g.inverse().images
            rows = g.images[self.elements][:, ginv]
            cached = self.lookup(rows)
            if len(self._conj_maps) < 64:
                self._conj_maps[key] = cached
        return cached

    def power_rows(self, idx: np.ndarray, k: int) -> np.ndarray:
        """Indices of e_i^k."""
        rows = _pow_rows(self.elements[idx], k)
        return self.lookup(rows)

    # -- conjugacy classes --------------------------------------------------

    def conjugacy_classes(self) -> list[ConjugacyClass]:
        if self._classes is None:
            n = self.order
            if self.generators:
                maps = np.array([self.conj_map(g) for g in self.generators])
            else:
                maps = np.zeros((1, n), dtype=np.int64)
                maps[0] = np.arange(n)
            class_of, reps = kernels.orbit_partition(maps)
            orders = self.element_orders
            classes = []
            for cid, rep in enumerate(reps):
                members = np.nonzero(class_of == cid)[0]
                classes.append(
                    ConjugacyClass(
                        representative=self.element(int(rep)),
                        size=int(members.size),
                        element_order=int(orders[rep]),
                        member_index=members,
                    )
                )
            self._classes = classes
            self._class_of = class_of
        return self._classes

    @property
    def class_of(self) -> np.ndarray:
        self.conjugacy_classes()
        return self._class_of

    # -- subgroup machinery --------------------------------------------------

    def subgroup(self, gens: list[Perm]) -> SubgroupHandle:
        """Subgroup generated by ``gens`` (closure within this group)."""
        idx = self._closure_indices([self.index_of(g) for g in gens])
        return SubgroupHandle(self, list(gens), idx)

    def trivial_subgroup(self) -> SubgroupHandle:
        return SubgroupHandle(self, [], np.array([0], dtype=np.int64))

    def full_subgroup(self) -> SubgroupHandle:
        return SubgroupHandle(self, list(self.generators),
                              np.arange(self.order, dtype=np.int64))

    def subgroup_from_indices(self, idx: np.ndarray) -> SubgroupHandle:
        """Wrap an index set known to be a subgroup; generators re-derived."""
        idx = np.unique(np.asarray(idx, dtype=np.int64))
        gens = self._generators_for(idx)
        return SubgroupHandle(self, gens, idx)

    def _generators_for(self, idx: np.ndarray) -> list[Perm]:
        """Small generating set for the subgroup with the given indices."""
        present = np.zeros(self.order, dtype=bool)
        present[idx] = True
        gens: list[int] = []
        have = np.zeros(self.order, dtype=bool)
        have[0] = True
        count = 1
        for i in idx:
            if i == 0 or have[i]:
                continue
            gens.append(int(i))
            closed = self._closure_indices(gens)
            have[:] = False
            have[closed] = True
            count = closed.size
            if count == idx.size:
                break
        return [self.element(i) for i in gens]

    def _closure_indices(self, gen_idx: list[int]) -> np.ndarray:
        seen = np.zeros(self.order, dtype=bool)
        seen[0] = True
        out = [0]
        frontier = []
        for i in gen_idx:
            if not seen[i]:
                seen[i] = True
                out.append(int(i))
                frontier.append(int(i))
        gen_rows = [self.elements[i] for i in gen_idx]
        while frontier:
            fr = np.array(frontier, dtype=np.int64)
            nxt = []
            for row in gen_rows:
                prods = self.mul_rows(fr, row)
                for p in prods:
                    if not seen[p]:
                        seen[p] = True
                        out.append(int(p))
                        nxt.append(int(p))
            frontier = nxt
        return np.array(sorted(out), dtype=np.int64)

    def _is_normal_set(self, idx: np.ndarray, gens: list[Perm]) -> bool:
        mask = np.zeros(self.order, dtype=bool)
        mask[idx] = True
        for g in self.generators:
            cm = self.conj_map(g)
            if not mask[cm[idx]].all():
                return False
        return True

    def normal_closure(self, seed_idx: list[int]) -> SubgroupHandle:
        gens = [i for i in seed_idx if i != 0]
        while True:
            idx = self._closure_indices(gens)
            mask = np.zeros(self.order, dtype=bool)
            mask[idx] = True
            new = []
            for g in self.generators:
                cm = self.conj_map(g)
                conj = cm[np.array(gens, dtype=np.int64)] if gens else np.array([], dtype=np.int64)
                for c in conj:
                    if not mask[c]:
                        new.append(int(c))
            if not new:
                sub = SubgroupHandle(self, [self.element(i) for i in gens], idx)
                sub._normal = True
                return sub
            gens.extend(new)

    # -- named structural operations ------------------------------------------

    def centralizer(self, x: Perm) -> SubgroupHandle:
        self.index_of(x)  # membership check, raises otherwise
        left = self.elements[:, x.images]   # e * x
        right = x.images[self.elements]     # x * e
        mask = np.all(left == right, axis=1)
        return self.subgroup_from_indices(np.nonzero(mask)[0])

    def center(self) -> SubgroupHandle:
        if self._center is None:
            mask = np.ones(self.order, dtype=bool)
            for g in self.generators:
                left = self.elements[:, g.images]
                right = g.images[self.elements]
                mask &= np.all(left == right, axis=1)
            self._center = self.subgroup_from_indices(np.nonzero(mask)[0])
        return self._center

    def centralizer_of_set(self, idx: np.ndarray) -> SubgroupHandle:
        sub_gens = self._generators_for(np.asarray(idx, dtype=np.int64))
        mask = np.ones(self.order, dtype=bool)
        for g in sub_gens:
            left = self.elements[:, g.images]
            right = g.images[self.elements]
            mask &= np.all(left == right, axis=1)
        return self.subgroup_from_indices(np.nonzero(mask)[0])

    def normalizer_of(self, sub: SubgroupHandle) -> SubgroupHandle:
        mask = np.ones(self.order, dtype=bool)
        smask = sub.mask()
        inv_rows = self.elements[self.inverse_index]
        for s in sub.generators:
            rows = np.take_along_axis(self.elements[:, s.images], inv_rows, axis=1)
            mask &= smask[self.lookup(rows)]
        return self.subgroup_from_indices(np.nonzero(mask)[0])

    def derived_subgroup(self) -> SubgroupHandle:
        seeds = []
        for a in self.generators:
            for b in self.generators:
                c = a * b * a.inverse() * b.inverse()
                if not c.is_identity():
                    seeds.append(self.index_of(c))
        return self.normal_closure(seeds)

    def sylow(self, p: int) -> SubgroupHandle:
        target, _ = p_part(self.order, p)
        if target == 1:
            return self.trivial_subgroup()
        if target == self.order:
            return self.full_subgroup()
        orders = self.element_orders
        p_mask = _is_p_power(orders, p)
        # start from a p-element of maximal order, first in enumeration order
        p_orders = np.where(p_mask, orders, 0)
        start = int(np.argmax(p_orders == p_orders.max()))
        current = self.subgroup([self.element(start)])
        while current.order < target:
            norm = self.normalizer_of(current)
            cand_mask = np.zeros(self.order, dtype=bool)
            cand_mask[norm.indices] = True
            cand_mask &= p_mask
            cand_mask[current.indices] = False
            cand = np.nonzero(cand_mask)[0]
            grew = False
            for y in cand:
                bigger = self.subgroup(current.generators + [self.element(int(y))])
                if bigger.order % p == 0 and _is_p_power_int(bigger.order, p):
                    current = bigger
                    grew = True
                    break
            if not grew:  # pragma: no cover - normalizer growth is guaranteed
                raise CapExceeded("sylow extension stalled")
        return current

    def agemo(self, p: int) -> SubgroupHandle:
        """Subgroup generated by all p-th powers (p-groups only)."""
        self._require_p_group(p)
        idx = np.unique(self.power_rows(np.arange(self.order, dtype=np.int64), p))
        gens = self._generators_for(idx)
        return self.subgroup(gens) if gens else self.trivial_subgroup()

    def omega(self, p: int) -> SubgroupHandle:
        """Subgroup generated by elements of order dividing p (p-groups only)."""
        self._require_p_group(p)
        idx = np.nonzero(self.element_orders <= p)[0]
        gens = self._generators_for(idx.astype(np.int64))
        return self.subgroup(gens) if gens else self.trivial_subgroup()

    def frattini_of_pgroup(self, p: int) -> SubgroupHandle:
        self._require_p_group(p)
        derived = self.derived_subgroup()
        powers = np.unique(self.power_rows(np.arange(self.order, dtype=np.int64), p))
        idx = self._closure_indices(
            [self.index_of(g) for g in derived.generators]
            + [int(i) for i in powers if i != 0]
        )
        return self.subgroup_from_indices(idx)

    def lower_central_series(self, p: int | None = None) -> list[SubgroupHandle]:
        """[G, G'] chain: G = K1 >= K2 = G' >= ... down to 1."""
        series = [self.full_subgroup()]
        current = self.derived_subgroup()
        while True:
            series.append(current)
            if current.order == 1:
                return series
            seeds = []
            for g in self.generators:
                for k in current.generators:
                    c = g * k * g.inverse() * k.inverse()
                    if not c.is_identity():
                        seeds.append(self.index_of(c))
            nxt = self.normal_closure(seeds)
            if nxt.order == current.order:  # pragma: no cover - non-nilpotent input
                series.append(nxt)
                return series
            current = nxt

    def upper_central_series(self) -> list[SubgroupHandle]:
        """1 = Z0 <= Z1 = Z(G) <= ... up to G (for nilpotent groups)."""
        series = [self.trivial_subgroup()]
        mask = np.zeros(self.order, dtype=bool)
        mask[0] = True
        inv_rows = self.elements[self.inverse_index]
        while True:
            new_mask = np.ones(self.order, dtype=bool)
            for g in self.generators:
                ginv = g.inverse().images
                # [x, g] = x*g*x^-1*g^-1 for every element x
                rows = np.take_along_axis(self.elements[:, g.images], inv_rows, axis=1)
                rows = rows[:, ginv]
                new_mask &= mask[self.lookup(rows)]
            if new_mask.sum() == mask.sum():
                return series
            mask = new_mask
            series.append(self.subgroup_from_indices(np.nonzero(mask)[0]))
            if mask.all():
                return series

    def nilpotency_class(self) -> int:
        return len(self.lower_central_series()) - 1

    def core_of(self, sub: SubgroupHandle) -> SubgroupHandle:
        if sub.parent is not self:
            raise NotASubgroup("subgroup belongs to a different parent")
        mask = sub.mask()
        conj_maps = [self.conj_map(g) for g in self.generators]
        changed = True
        while changed:
            changed = False
            for cm in conj_maps:
                conj_mask = np.zeros_like(mask)
                conj_mask[cm[np.nonzero(mask)[0]]] = True
                newm = mask & conj_mask
                if newm.sum() != mask.sum():
                    mask = newm
                    changed = True
        idx = np.nonzero(mask)[0]
        sub = self.subgroup_from_indices(idx)
        sub._normal = True
        return sub

    def o_p(self, p: int) -> SubgroupHandle:
        return self.core_of(self.sylow(p))

    def o_p_prime(self, p: int) -> SubgroupHandle:
        result = self.trivial_subgroup()
        mask = result.mask()
        orders = self.element_orders
        for cls in self.conjugacy_classes():
            rep = int(cls.member_index[0])
            if rep == 0 or mask[rep]:
                continue
            if orders[rep] % p == 0:
                continue
            cand = self.normal_closure(
                [self.index_of(g) for g in result.generators] + [rep]
            )
            if cand.order % p != 0:
                result = cand
                mask = result.mask()
        result._normal = True
        return result

    def o_upper_p_prime(self, p: int) -> SubgroupHandle:
        """Smallest normal subgroup with p'-quotient (closure of p-elements)."""
        orders = self.element_orders
        seeds = []
        for cls in self.conjugacy_classes():
            rep = int(cls.member_index[0])
            if rep != 0 and _is_p_power_int(int(orders[rep]), p):
                seeds.append(rep)
        if not seeds:
            return self.trivial_subgroup()
        return self.normal_closure(seeds)

    def fitting(self) -> SubgroupHandle:
        parts: list[int] = []
        for p in factorint(self.order):
            parts.extend(self.index_of(g) for g in self.o_p(p).generators)
        if not parts:
            return self.trivial_subgroup()
        return self.subgroup_from_indices(self._closure_indices(parts))

    def quotient(self, sub: SubgroupHandle) -> "Group":
        if sub.parent is not self:
            raise NotASubgroup("subgroup belongs to a different parent")
        if not sub.is_normal:
            raise NotNormal("quotient requires a normal subgroup")
        if sub.order == 1:
            return Group(self.generators, self.degree,
                         name=f"{self.name}/1", cap=self.cap)
        n = self.order
        if sub.order == n:
            return Group([], 1, name=f"{self.name}/{self.name}", cap=self.cap)
        # cosets = orbits of right multiplication by the subgroup's generators
        maps = np.array(
            [self.mul_rows(np.arange(n, dtype=np.int64), s.images)
             for s in sub.generators]
        )
        coset_of, reps = kernels.orbit_partition(maps)
        ncos = reps.size
        assert ncos * sub.order == n
        gen_imgs = []
        for g in self.generators:
            target = self.lookup(g.images[self.elements[reps]])
            gen_imgs.append(coset_of[target].astype(np.int32))
        return Group(
            [Perm(im) for im in gen_imgs],
            degree=int(ncos),
            name=f"{self.name}/N{sub.order}",
            cap=self.cap,
        )

    def is_p_constrained(self, p: int) -> bool:
        opp = self.o_p_prime(p)
        bar = self.quotient(opp) if opp.order > 1 else self
        core = bar.o_p(p)
        cent = bar.centralizer_of_set(core.indices)
        return core.contains(cent)

    def normal_subgroups(self) -> list[SubgroupHandle]:
        """All normal subgroups, via joins of class closures."""
        if self._normal_subgroups is not None:
            return self._normal_subgroups
        atoms = []
        seen_sets: set[bytes] = set()
        for cls in self.conjugacy_classes():
            rep = int(cls.member_index[0])
            if rep == 0:
                continue
            nc = self.normal_closure([rep])
            key = nc.indices.tobytes()
            if key not in seen_sets:
                seen_sets.add(key)
                atoms.append(nc)
        found = {self.trivial_subgroup().indices.tobytes(): self.trivial_subgroup()}
        work = [self.trivial_subgroup()]
        while work:
            cur = work.pop()
            for atom in atoms:
                joined_idx = self._closure_indices(
                    [self.index_of(g) for g in cur.generators]
                    + [self.index_of(g) for g in atom.generators]
                )
                key = joined_idx.tobytes()
                if key not in found:
                    sub = self.subgroup_from_indices(joined_idx)
                    sub._normal = True
                    found[key] = sub
                    work.append(sub)
        subs = sorted(found.values(), key=lambda s: (s.order, s.indices.tobytes()))
        self._normal_subgroups = subs
        return subs

    def is_abelian(self) -> bool:
        return all(
            (a * b) == (b * a)
            for i, a in enumerate(self.generators)
            for b in self.generators[i + 1:]
        )

    def _require_p_group(self, p: int) -> None:
        if not _is_p_power_int(self.order, p):
            raise NotAPGroup(f"|G| = {self.order} is not a power of {p}")

    def to_json(self) -> dict:
        return {
            "degree": self.degree,
            "generators": [[int(x) for x in g.images] for g in self.generators],
            "name": self.name,
        }

    @staticmethod
    def from_json(data: dict, cap: int = DEFAULT_CAP) -> "Group":
        return Group(
            [Perm(g) for g in data["generators"]],
            degree=int(data["degree"]),
            name=str(data.get("name", "group")),
            cap=cap,
        )

    def __repr__(self) -> str:
        return f"Group({self.name}, degree={self.degree})"


# -- helpers -----------------------------------------------------------------


def _pow_rows(rows: np.ndarray, k: int) -> np.ndarray:
    """Row-wise k-th power of permutation rows."""
    n, d = rows.shape
    result = np.tile(np.arange(d, dtype=np.int32), (n, 1))
    base = rows.copy()
    while k:
        if k & 1:
            result = np.take_along_axis(result, base, axis=1)
        k >>= 1
        if k:
            base = np.take_along_axis(base, base, axis=1)
    return result


def _greedy_base(elems: np.ndarray) -> np.ndarray:
    """Points whose images jointly distinguish all elements (<= 5 for our reps)."""
    n, d = elems.shape
    base: list[int] = [0]
    while True:
        keys = np.zeros(n, dtype=np.int64)
        for t, b in enumerate(base):
            keys |= elems[:, b].astype(np.int64) << (12 * t)
        order = np.argsort(keys, kind="stable")
        sk = keys[order]
        dup = np.nonzero(sk[1:] == sk[:-1])[0]
        if dup.size == 0:
            return np.array(base, dtype=np.int64)
        i, j = order[dup[0]], order[dup[0] + 1]
        diff = np.nonzero(elems[i] != elems[j])[0]
        base.append(int(diff[0]))
        if len(base) > 5:
            raise BadParameters(
                "group action needs a base of more than 5 points; "
                "use a representation with smaller point stabilizers"
            )


def _is_p_power(values: np.ndarray, p: int) -> np.ndarray:
    out = np.ones_like(values, dtype=bool)
    v = values.copy()
    while True:
        done = v == 1
        if done.all():
            return out
        divisible = (v % p == 0) & ~done
        out &= divisible | done
        v = np.where(divisible, v // p, 1)


def _is_p_power_int(n: int, p: int) -> bool:
    while n % p == 0:
        n //= p
    return n == 1
