"""The branching rule on Schur-Weyl basis states.

A Schur-Weyl basis vector of level ``n`` is a triplet: a partition of
``n`` with at most ``d`` rows, a standard Weyl tableau of that shape
over ``{1..d}``, and a standard Young tableau of that shape stored as
its growth path.  Appending one letter ``k`` maps such a vector to a
superposition one level up (``branch_up``); reading the last letter off
maps it to a superposition one level down paired with the letter
removed (``branch_down``).  Both directions preserve norm exactly.

States here are finitely supported maps from basis labels to exact
amplitudes; :class:`HybridState` additionally carries an unconsumed
suffix of computational letters, which is what the transform iterates.
"""

from __future__ import annotations

from dataclasses import dataclass

from schurweyl.amplitudes import down_transitions, edge_amplitude, up_transitions
from schurweyl.radicals import ZERO, Radical
from schurweyl.tableaux import (
    GrowthPath,
    InvariantViolation,
    Partition,
    WeylTableau,
    add_box,
    addable_boxes,
    check_partition,
    gt_to_weyl,
    pad_partition,
    validate_path,
    validate_weyl,
    weyl_to_gt,
)

Word = tuple[int, ...]


@dataclass(frozen=True)
class SchurWeylTriplet:
    """Basis label |shape, weyl, young> at level ``sum(shape)``."""

    shape: Partition
    weyl: WeylTableau
    young: GrowthPath

    @property
    def level(self) -> int:
        return sum(self.shape)

    @property
    def d(self) -> int:
        return self.weyl.d

    def sort_key(self):
        return (self.shape, weyl_to_gt(self.weyl).key(), self.young)


def validate_triplet(triplet: SchurWeylTriplet) -> SchurWeylTriplet:
    shape = check_partition(triplet.shape)
    validate_weyl(triplet.weyl)
    validate_path(triplet.young)
    if not (shape == triplet.weyl.shape == triplet.young[-1]):
        raise InvariantViolation(
            "components share one shape",
            f"{shape} / {triplet.weyl.shape} / {triplet.young[-1]}",
        )
    return triplet


def empty_triplet(d: int) -> SchurWeylTriplet:
    return SchurWeylTriplet((), WeylTableau((), d), ((),))


def _merge(acc: dict, key, amp: Radical) -> None:
    new = acc.get(key, ZERO) + amp
    if new.is_zero():
        acc.pop(key, None)
    else:
        acc[key] = new


class _AmplitudeMap:
    """Shared behavior of exact finitely-supported states."""

    __slots__ = ("_terms",)

    def __init__(self, terms: dict):
        self._terms = {
            key: amp for key, amp in terms.items() if not amp.is_zero()
        }

    def terms(self) -> dict:
        return dict(self._terms)

    def amplitude(self, key) -> Radical:
        return self._terms.get(key, ZERO)

    def norm_squared(self) -> Radical:
        total = ZERO
        for amp in self._terms.values():
            total = total + amp.square()
        return total

    def __len__(self):
        return len(self._terms)

    def __eq__(self, other):
        if type(self) is not type(other):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self):
        return hash(frozenset(self._terms.items()))


class SchurWeylState(_AmplitudeMap):
    """Exact superposition of Schur-Weyl triplets of one level."""

    def __init__(self, terms: dict[SchurWeylTriplet, Radical]):
        super().__init__(terms)
        levels = {t.level for t in self._terms}
        dims = {t.d for t in self._terms}
        if len(levels) > 1 or len(dims) > 1:
            raise InvariantViolation("terms share level and alphabet")

    @property
    def level(self) -> int:
        return next(iter(self._terms)).level

    @property
    def d(self) -> int:
        return next(iter(self._terms)).d

    def sorted_terms(self) -> list[tuple[SchurWeylTriplet, Radical]]:
        return sorted(
            self._terms.items(), key=lambda item: item[0].sort_key(), reverse=True
        )


class ComputationalState(_AmplitudeMap):
    """Exact superposition of computational-basis words."""

    def __init__(self, terms: dict[Word, Radical]):
        super().__init__(terms)
        if len({len(word) for word in self._terms}) > 1:
            raise InvariantViolation("terms share level and alphabet")

    def sorted_terms(self) -> list[tuple[Word, Radical]]:
        return sorted(self._terms.items())


class HybridState(_AmplitudeMap):
    """Superposition of (triplet, unconsumed word suffix) pairs."""

    def sorted_terms(self):
        return sorted(
            self._terms.items(),
            key=lambda item: (item[0][0].sort_key(), item[0][1]),
            reverse=True,
        )


def branch_up(
    triplet: SchurWeylTriplet, k: int, engine: str = "louck"
) -> SchurWeylState:
    """Append letter ``k``: the exact superposition one level up.

    Every addable box of the shape (kept within ``d`` rows) extends the
    Young tableau; for each the Weyl tableau ranges over the valid
    insertions of ``k`` landing on that box's row, weighted by the
    transition amplitude.
    """
    validate_triplet(triplet)
    d = triplet.d
    if not 1 <= k <= d:
        raise ValueError(f"letter out of range: {k} with d={d}")
    lower = weyl_to_gt(triplet.weyl)
    by_shape: dict[Partition, list] = {}
    for upper in up_transitions(lower, k):
        by_shape.setdefault(upper.shape, []).append(upper)
    out: dict[SchurWeylTriplet, Radical] = {}
    for box in addable_boxes(triplet.shape):
        if box.row > d:
            continue
        grown = add_box(triplet.shape, box.row)
        young = triplet.young + (grown,)
        for upper in by_shape.get(grown, ()):
            amp = edge_amplitude(lower, upper, engine)
            _merge(out, SchurWeylTriplet(grown, gt_to_weyl(upper), young), amp)
    return SchurWeylState(out)


def branch_down(
    triplet: SchurWeylTriplet, engine: str = "louck"
) -> list[tuple[SchurWeylTriplet, int, Radical]]:
    """Strip the last letter: terms ``(lower triplet, letter, amplitude)``.

    The Young tableau forces the lower shape (drop the last growth
    step); each valid removal letter contributes one term.  Returns []
    only for the level-0 triplet.
    """
    validate_triplet(triplet)
    if not triplet.shape:
        return []
    upper = weyl_to_gt(triplet.weyl)
    shrunken = triplet.young[-2]
    young = triplet.young[:-1]
    target_top = pad_partition(shrunken, triplet.d)
    out = []
    for lower, k in down_transitions(upper):
        if lower.levels[-1] != target_top:
            continue
        amp = edge_amplitude(lower, upper, engine)
        out.append(
            (SchurWeylTriplet(shrunken, gt_to_weyl(lower), young), k, amp)
        )
    out.sort(key=lambda term: (term[1], term[0].sort_key()))
    return out


def branch_up_state(state: HybridState, engine: str = "louck") -> HybridState:
    """Consume the first unread letter of every term."""
    out: dict = {}
    for (triplet, word), amp in state.terms().items():
        if not word:
            raise InvariantViolation("nonempty suffix", f"{triplet}")
        head, rest = word[0], word[1:]
        for grown, edge_amp in branch_up(triplet, head, engine).terms().items():
            _merge(out, (grown, rest), amp * edge_amp)
    return HybridState(out)


def branch_down_state(state: HybridState, engine: str = "louck") -> HybridState:
    """Move one letter from every term's triplet onto its word."""
    out: dict = {}
    for (triplet, word), amp in state.terms().items():
        if not triplet.shape:
            raise InvariantViolation("nonempty register", f"{word}")
        for shrunken, k, edge_amp in branch_down(triplet, engine):
            _merge(out, (shrunken, (k, *word)), amp * edge_amp)
    return HybridState(out)
