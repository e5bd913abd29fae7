"""Input generators for the proposition checker.

Every sampler draws random inputs from a numpy ``Generator`` and enumerates
an exhaustive family of small inputs. The exhaustive family covers the shapes
in :data:`EXHAUSTIVE_SHAPES`; for each shape it uses the finest level set
whose enumeration fits the cap.

.. autosummary::
    :toctree: samplers

    Sampler
    SetSampler
    ChainSampler
    ConvexUnderConcaveSampler
    SequenceSampler
    MappingSampler
"""

import abc
import logging
from functools import lru_cache
from itertools import islice, permutations, product

import numpy as np
from traitlets import Bool, Integer, Unicode

from ..abstract_traits import ABCHasTraits
from ..analysis import MappingSpec
from ..classify import quasiconcave_violation, quasiconvex_violation
from ..core import TOLERANCE, FuzzySoftSet, intersection, subset_of

logger = logging.getLogger(__name__)

#: Grid shapes ``(parameters, objects)`` of the exhaustive tier.
EXHAUSTIVE_SHAPES = ((1, 1), (1, 2), (2, 1), (1, 3), (2, 2), (2, 3))

#: Source shapes enumerated for mapping claims.
MAPPING_SHAPES = ((1, 1), (1, 2), (2, 1), (2, 2), (1, 3))

#: Level sets tried from finest to coarsest, keyed by their size.
LEVELS = {k: np.round(np.linspace(0.0, 1.0, k), 2) for k in (11, 6, 3, 2)}

#: Largest number of raw grids filtered into a pool.
POOL_LIMIT = 4096

KINDS = ("any", "convex", "concave", "normalized", "number")


def labels(shape, target=False):
    """Default labels ``(universe, parameters)`` for a grid shape."""
    n, m = shape
    if target:
        return tuple(f"k{t + 1}" for t in range(m)), tuple(f"e{i + 1}'" for i in range(n))
    return tuple(f"h{t + 1}" for t in range(m)), tuple(f"e{i + 1}" for i in range(n))


def _rows_and_profile(grid):
    yield from grid
    yield grid.min(axis=0)


def grid_matches(kind, grid):
    """Fast membership test of a raw grid in one of :data:`KINDS`."""
    if kind == "any":
        return True
    if kind == "convex":
        return all(quasiconcave_violation(row) is None for row in _rows_and_profile(grid))
    if kind == "concave":
        return all(quasiconvex_violation(row) is None for row in _rows_and_profile(grid))
    normalized = all(row.max() >= 1.0 - TOLERANCE for row in _rows_and_profile(grid))
    if kind == "normalized":
        return normalized
    if kind == "number":
        return normalized and grid_matches("convex", grid)
    msg = f"unknown grid kind {kind!r}; expected one of {', '.join(KINDS)}"
    raise ValueError(msg)


@lru_cache(maxsize=None)
def grid_pool(kind, shape, n_levels, target=False):
    """All sets of ``kind`` with the given shape and level set, in lexicographic order."""
    n, m = shape
    universe, parameters = labels(shape, target)
    pool = []
    for values in product(LEVELS[n_levels], repeat=n * m):
        grid = np.array(values).reshape(n, m)
        if grid_matches(kind, grid):
            pool.append(FuzzySoftSet._trusted(universe, parameters, grid))
    logger.debug("pool %s %s L%d: %d sets", kind, shape, n_levels, len(pool))
    return tuple(pool)


def level_step(n_levels):
    """Spacing of a level set from :data:`LEVELS`, e.g. 0.1 for the 11-level grid."""
    return round(1.0 / (n_levels - 1), 2)


def fitting_pool(kind, shape, arity, cap, target=False):
    """Finest pool whose ``arity``-fold product fits ``cap``, or None."""
    n, m = shape
    for n_levels in LEVELS:
        if n_levels ** (n * m) > POOL_LIMIT:
            continue
        pool = grid_pool(kind, shape, n_levels, target)
        if len(pool) ** arity <= cap:
            return n_levels, pool
    return None


def _values(rng, size, levels):
    if levels is None:
        return np.round(rng.random(size), 2)
    return rng.choice(levels, size=size)


def _unimodal_row(rng, m, levels, peak, top=None):
    values = _values(rng, m, levels)
    top = values.max() if top is None else top
    left = np.sort(values[:peak])
    right = np.sort(values[peak + 1:])[::-1]
    return np.minimum(np.concatenate([left, [top], right]), top)


def random_grid(rng, kind, shape, levels=None, peak=None):
    """Random grid of ``kind``; ``peak`` fixes the common peak of numbers."""
    n, m = shape
    if kind == "any":
        return _values(rng, (n, m), levels)
    if kind == "convex":
        return np.array([_unimodal_row(rng, m, levels, rng.integers(m)) for _ in range(n)])
    if kind == "concave":
        for _ in range(20):
            grid = 1.0 - random_grid(rng, "convex", shape, levels)
            if grid_matches("concave", grid):
                return grid
        # valleys sharing their lowest object always pass
        low = rng.integers(m) if peak is None else peak
        return 1.0 - np.array([_unimodal_row(rng, m, levels, low) for _ in range(n)])
    if kind == "normalized":
        grid = _values(rng, (n, m), levels)
        grid[:, rng.integers(m) if peak is None else peak] = 1.0
        return grid
    if kind == "number":
        peak = rng.integers(m) if peak is None else peak
        return np.array([_unimodal_row(rng, m, levels, peak, top=1.0) for _ in range(n)])
    msg = f"unknown grid kind {kind!r}; expected one of {', '.join(KINDS)}"
    raise ValueError(msg)


def random_levels(rng):
    """Level set of a random draw: the 0.1 grid or two-decimal continuous values."""
    return LEVELS[11] if rng.random() < 0.5 else None


def profile_twin(F):
    """Set whose rows all equal the intersection profile of ``F``."""
    profile = F.grid.min(axis=0)
    return F._derived(np.tile(profile, (F.shape[0], 1)))


class Sampler(ABCHasTraits):
    """Abstract base class for input generators.

    Attributes
    ----------
    arity : int
        Number of fuzzy soft sets in one input tuple.
    """

    arity = Integer(default_value=1)

    @abc.abstractmethod
    def draw(self, rng):
        """Return one random input tuple."""

    def plan(self, cap):
        """Exhaustive search bounds as a list of ``{"shape", "levels", "step", "count"}``.

        ``step`` is the spacing of the membership levels enumerated for the
        shape, or None when the shape mixes several level sets.
        """
        return []

    def exhaustive(self, cap):
        """Iterate the exhaustive family."""
        return iter(())


class SetSampler(Sampler):
    """Tuples of fuzzy soft sets of one kind and one shape.

    Attributes
    ----------
    kind : str
        One of ``any``, ``convex``, ``concave``, ``normalized``, ``number``.
    shared_peak : bool
        Give all fuzzy soft numbers of a tuple the same peak object.
    max_parameters, max_objects : int
        Largest random shape.
    """

    kind = Unicode(default_value="any")
    shared_peak = Bool(default_value=False)
    max_parameters = Integer(default_value=4)
    max_objects = Integer(default_value=6)

    def random_shape(self, rng):
        return int(rng.integers(1, self.max_parameters + 1)), int(rng.integers(1, self.max_objects + 1))

    def draw(self, rng):
        shape = self.random_shape(rng)
        levels = random_levels(rng)
        peak = int(rng.integers(shape[1])) if self.shared_peak else None
        universe, parameters = labels(shape)
        return tuple(
            FuzzySoftSet._trusted(universe, parameters, random_grid(rng, self.kind, shape, levels, peak))
            for _ in range(self.arity))

    def _pools(self, cap):
        for shape in EXHAUSTIVE_SHAPES:
            found = fitting_pool(self.kind, shape, self.arity, cap)
            if found is not None:
                yield shape, found[0], found[1]

    def plan(self, cap):
        return [{"shape": list(shape), "levels": n_levels, "step": level_step(n_levels),
                 "count": len(pool) ** self.arity}
                for shape, n_levels, pool in self._pools(cap)]

    def exhaustive(self, cap):
        for _, _, pool in self._pools(cap):
            yield from product(pool, repeat=self.arity)


class ChainSampler(SetSampler):
    """Increasing chains ``F1 ⊆ F2 ⊆ ...`` of fuzzy soft sets.

    Random chains are cumulative intersections of random sets of ``kind``,
    which keeps convexity.
    """

    arity = Integer(default_value=2)

    def draw(self, rng):
        sets = list(super().draw(rng))
        for k in range(len(sets) - 2, -1, -1):
            sets[k] = intersection(sets[k], sets[k + 1])
        return tuple(sets)

    def exhaustive(self, cap):
        for candidate in super().exhaustive(cap):
            if all(subset_of(a, b) for a, b in zip(candidate, candidate[1:])):
                yield candidate


class ConvexUnderConcaveSampler(SetSampler):
    """Pairs ``(F, G)`` with ``F`` convex, ``G`` concave and ``F ⊆ G``."""

    arity = Integer(default_value=2)

    def draw(self, rng):
        shape = self.random_shape(rng)
        levels = random_levels(rng)
        universe, parameters = labels(shape)
        concave = random_grid(rng, "concave", shape, levels)
        # scaling keeps every row and the profile convex
        convex = random_grid(rng, "convex", shape, levels) * concave.min()
        return (FuzzySoftSet._trusted(universe, parameters, convex),
                FuzzySoftSet._trusted(universe, parameters, concave))

    def _pools(self, cap):
        for shape in EXHAUSTIVE_SHAPES:
            for n_levels in LEVELS:
                if n_levels ** (shape[0] * shape[1]) > POOL_LIMIT:
                    continue
                convex = grid_pool("convex", shape, n_levels)
                concave = grid_pool("concave", shape, n_levels)
                if len(convex) * len(concave) <= cap:
                    yield shape, n_levels, (convex, concave)
                    break

    def plan(self, cap):
        return [{"shape": list(shape), "levels": n_levels, "step": level_step(n_levels),
                 "count": len(pools[0]) * len(pools[1])}
                for shape, n_levels, pools in self._pools(cap)]

    def exhaustive(self, cap):
        for _, _, (convex, concave) in self._pools(cap):
            for F, G in product(convex, concave):
                if subset_of(F, G):
                    yield F, G


def all_mappings(shape, bijective=False):
    """Every mapping out of a source of the given shape.

    Target universes have 1 to ``m`` objects and target parameter sets 1 to
    ``n + 1`` parameters; with ``bijective`` only permutations are produced.
    """
    n, m = shape
    universe, parameters = labels(shape)
    if bijective:
        p_maps = [tuple(perm) for perm in permutations(range(m))]
        q_maps = [tuple(perm) for perm in permutations(range(n))]
        sizes = [(m, n)]
    else:
        sizes = [(k, j) for k in range(1, m + 1) for j in range(1, n + 2)]
    for k, j in sizes:
        target_universe, target_parameters = labels((j, k), target=True)
        p_iter = p_maps if bijective else product(range(k), repeat=m)
        for p in p_iter:
            q_iter = q_maps if bijective else product(range(j), repeat=n)
            for q in q_iter:
                yield MappingSpec(
                    {x: target_universe[y] for x, y in zip(universe, p, strict=True)},
                    {e: target_parameters[b] for e, b in zip(parameters, q, strict=True)},
                    source_universe=universe, source_parameters=parameters,
                    target_universe=target_universe, target_parameters=target_parameters)


def random_mapping(rng, shape, bijective=False):
    """Random mapping out of a source of the given shape."""
    n, m = shape
    universe, parameters = labels(shape)
    if bijective:
        k, j = m, n
        p, q = rng.permutation(m), rng.permutation(n)
    else:
        k, j = int(rng.integers(1, m + 1)), int(rng.integers(1, n + 2))
        p, q = rng.integers(k, size=m), rng.integers(j, size=n)
    target_universe, target_parameters = labels((j, k), target=True)
    return MappingSpec(
        {x: target_universe[y] for x, y in zip(universe, p, strict=True)},
        {e: target_parameters[b] for e, b in zip(parameters, q, strict=True)},
        source_universe=universe, source_parameters=parameters,
        target_universe=target_universe, target_parameters=target_parameters)


def side_shape(f, side):
    if side == "target":
        return len(f.target_parameters), len(f.target_universe)
    return len(f.source_parameters), len(f.source_universe)


class MappingSampler(Sampler):
    """A mapping followed by ``arity`` fuzzy soft sets on one side of it.

    Attributes
    ----------
    side : str
        ``"source"`` or ``"target"``: where the sets live.
    kind : str
        Kind of the sets.
    twins : bool
        Replace the second set by the profile twin of the first.
    bijective : bool
        Only produce mappings whose ``p`` and ``q`` are bijections.
    """

    arity = Integer(default_value=0)
    side = Unicode(default_value="source")
    kind = Unicode(default_value="any")
    twins = Bool(default_value=False)
    bijective = Bool(default_value=False)

    def _sets(self, f, grids):
        universe, parameters = ((f.target_universe, f.target_parameters) if self.side == "target"
                                else (f.source_universe, f.source_parameters))
        sets = [FuzzySoftSet._trusted(universe, parameters, g) for g in grids]
        if self.twins and len(sets) > 1:
            sets[1] = profile_twin(sets[0])
        return sets

    def draw(self, rng):
        shape = (int(rng.integers(1, 4)), int(rng.integers(1, 6)))
        f = random_mapping(rng, shape, self.bijective)
        levels = random_levels(rng)
        grids = [random_grid(rng, self.kind, side_shape(f, self.side), levels)
                 for _ in range(self.arity)]
        return (f, *self._sets(f, grids))

    def _layout(self, cap):
        """Per mapping shape, the mappings with the set pool and quota each one gets."""
        target = self.side == "target"
        width = 1 if self.twins else self.arity
        for shape in MAPPING_SHAPES:
            mappings = list(all_mappings(shape, self.bijective))
            if self.arity == 0:
                yield shape, [(f, (), 1) for f in mappings[:cap]]
                continue
            # every mapping gets an equal share of the cap
            quota = max(1, cap // len(mappings))
            entries = []
            for f in mappings:
                sets_shape = side_shape(f, self.side)
                found = fitting_pool(self.kind, sets_shape, width, quota, target)
                pool = found[1] if found else grid_pool(self.kind, sets_shape, 2, target)
                entries.append((f, pool, min(quota, len(pool) ** width)))
            yield shape, entries

    def plan(self, cap):
        return [{"shape": list(shape), "levels": None, "step": None,
                 "count": sum(n for _, _, n in entries)}
                for shape, entries in self._layout(cap)]

    def exhaustive(self, cap):
        width = 1 if self.twins else self.arity
        for _, entries in self._layout(cap):
            for f, pool, quota in entries:
                if self.arity == 0:
                    yield (f,)
                    continue
                for combo in islice(product(pool, repeat=width), quota):
                    grids = [F.grid for F in combo] + [combo[0].grid] * (self.arity - width)
                    yield (f, *self._sets(f, grids))


class SequenceSampler(Sampler):
    """Finite sequence prefixes with a candidate limit and an epsilon.

    Inputs are ``(prefix, limit, epsilon)``, followed by a mapping out of the
    sequence's space when ``with_mapping`` is set. Most prefixes approach the
    limit geometrically; some do not decay at all.
    """

    with_mapping = Bool(default_value=False)

    def draw(self, rng):
        shape = (int(rng.integers(1, 4)), int(rng.integers(1, 6)))
        universe, parameters = labels(shape)
        levels = random_levels(rng)
        limit = random_grid(rng, "number", shape, levels)
        ratio = 1.0 if rng.random() < 0.2 else float(rng.uniform(0.2, 0.9))
        length = int(rng.integers(4, 13))
        prefix = tuple(
            FuzzySoftSet._trusted(universe, parameters,
                         np.clip(limit + (random_grid(rng, "any", shape, levels) - limit) * ratio ** n, 0.0, 1.0))
            for n in range(1, length + 1))
        epsilon = float(np.round(rng.uniform(0.02, 0.3), 3))
        inputs = (prefix, FuzzySoftSet._trusted(universe, parameters, limit), epsilon)
        if self.with_mapping:
            inputs = (*inputs, random_mapping(rng, shape))
        return inputs


def sample_numbers(f: MappingSpec):
    """Fuzzy soft numbers on the source of ``f`` used to decide number preservation.

    All 0/1 numbers when they fit :data:`POOL_LIMIT`, otherwise the numbers whose
    rows all equal one block of ones.
    """
    n, m = len(f.source_parameters), len(f.source_universe)
    if 2 ** (n * m) <= POOL_LIMIT:
        grids = [F.grid for F in grid_pool("number", (n, m), 2)]
    else:
        grids = []
        for start in range(m):
            for stop in range(start + 1, m + 1):
                row = np.zeros(m)
                row[start:stop] = 1.0
                grids.append(np.tile(row, (n, 1)))
    return [FuzzySoftSet._trusted(f.source_universe, f.source_parameters, g) for g in grids]
