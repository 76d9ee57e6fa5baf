"""Multi-valued categorical variables and their disjunctive matrices.

A multi-valued variable assigns to every individual a non-empty *set* of
modalities. Two 0/1 matrices summarise it:

* the meet matrix marks the modality an individual is forced to take
  (its set is a singleton);
* the join matrix marks every modality an individual may take.

Any classical disjunctive complete table obtained by choosing one modality
per individual lies entrywise between the two.
"""

from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from typing import Iterable, Iterator, Sequence

import numpy as np

from .errors import EnumerationTooLarge, SymCAError

DEFAULT_ENUMERATION_LIMIT = 10**6


@dataclass(frozen=True)
class MultiValuedVariable:
    """Per-individual sets of modality indices.

    Parameters
    ----------
    name : str
        Variable label, e.g. ``"eyes"``.
    modalities : tuple of str
        Ordered, unique modality labels. Column ``j`` of every derived
        matrix refers to ``modalities[j]``.
    observations : tuple of frozenset of int
        One non-empty index set per individual.
    """

    name: str
    modalities: tuple[str, ...]
    observations: tuple[frozenset[int], ...]

    def __post_init__(self):
        object.__setattr__(self, "modalities", tuple(self.modalities))
        object.__setattr__(
            self, "observations", tuple(frozenset(o) for o in self.observations)
        )
        q = len(self.modalities)
        if q < 1:
            raise SymCAError("a variable needs at least one modality")
        if len(set(self.modalities)) != q:
            raise SymCAError(f"duplicate modality labels in {self.modalities!r}")
        if not self.observations:
            raise SymCAError("a variable needs at least one individual")
        for i, obs in enumerate(self.observations):
            if not obs:
                raise SymCAError(f"empty observation set at individual {i}")
            bad = [k for k in obs if not (0 <= k < q)]
            if bad:
                raise SymCAError(
                    f"modality index {bad[0]} out of range [0, {q}) at individual {i}"
                )

    @property
    def n_individuals(self) -> int:
        return len(self.observations)

    @property
    def n_modalities(self) -> int:
        return len(self.modalities)

    @property
    def n_completions(self) -> int:
        """Number of disjunctive complete tables compatible with the data."""
        return math.prod(len(o) for o in self.observations)

    def labels(self) -> list[list[str]]:
        """Observation sets rendered back to labels, in modality order."""
        return [[self.modalities[k] for k in sorted(o)] for o in self.observations]


def parse_observations(
    rows: Iterable[Iterable[str]],
    vocabulary: Sequence[str] | None = None,
    name: str = "",
) -> MultiValuedVariable:
    """Build a variable from raw label sets.

    Modalities follow ``vocabulary`` when given, otherwise the sorted
    distinct labels. Repeated labels within one observation collapse.
    """
    sets = [set(r) for r in rows]
    if not sets:
        raise SymCAError("no observations given")
    for i, s in enumerate(sets):
        if not s:
            raise SymCAError(f"empty observation set at individual {i}")
    if vocabulary is None:
        modalities = tuple(sorted(set().union(*sets)))
    else:
        modalities = tuple(vocabulary)
    index = {label: k for k, label in enumerate(modalities)}
    observations = []
    for i, s in enumerate(sets):
        unknown = sorted(s - index.keys())
        if unknown:
            raise SymCAError(f"unknown label {unknown[0]!r} at individual {i}")
        observations.append(frozenset(index[label] for label in s))
    return MultiValuedVariable(name, modalities, tuple(observations))


def meet_matrix(v: MultiValuedVariable) -> np.ndarray:
    """0/1 matrix with a 1 at ``(i, j)`` iff observation ``i`` is ``{j}``."""
    out = np.zeros((v.n_individuals, v.n_modalities), dtype=np.int64)
    for i, obs in enumerate(v.observations):
        if len(obs) == 1:
            (j,) = obs
            out[i, j] = 1
    return out


def join_matrix(v: MultiValuedVariable) -> np.ndarray:
    """0/1 matrix with a 1 at ``(i, j)`` iff ``j`` belongs to observation ``i``."""
    out = np.zeros((v.n_individuals, v.n_modalities), dtype=np.int64)
    for i, obs in enumerate(v.observations):
        out[i, sorted(obs)] = 1
    return out


def enumerate_completions(
    v: MultiValuedVariable, limit: int = DEFAULT_ENUMERATION_LIMIT
) -> Iterator[np.ndarray]:
    """Yield every disjunctive complete table compatible with ``v``.

    Choices run in lexicographic order: the last individual's choice varies
    fastest, each individual's options in ascending modality index.
    """
    count = v.n_completions
    if count > limit:
        raise EnumerationTooLarge(count, limit)
    return _completions(v)


def _completions(v):
    m, q = v.n_individuals, v.n_modalities
    options = [sorted(o) for o in v.observations]
    rows = np.arange(m)
    for choice in itertools.product(*options):
        table = np.zeros((m, q), dtype=np.int64)
        table[rows, choice] = 1
        yield table
