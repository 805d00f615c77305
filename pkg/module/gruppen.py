"""Endliche Gruppen als Cayley-Tafeln samt Untergruppen- und Nebenklassenlogik.

Elemente sind dichte Indizes ``0 … |G|-1``. Die Nummerierung ist fest:

* zyklisch ``Z/n``: Restklasse ``k`` ↦ ``k``
* dihedral ``D_n``: ``r^a s^b`` ↦ ``a + n·b``
* affin ``Z_p ⋊ Z_p^*``: ``(k, l)`` ↦ ``(l-1)·p + k``

In allen drei Familien hat das neutrale Element den Index 0. Die Konstruktion
kostet O(|G|²); die vollständige Prüfung der Gruppenaxiome (O(|G|³)) liegt in
:func:`check_group_axioms` und wird nur bei Bedarf aufgerufen.
"""

from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from typing import Iterable, Iterator, Optional, Sequence, Tuple

import numpy as np
from sympy import isprime

from module.fehler import GroupConstructionError, InvariantViolation, SubgroupError

__all__ = [
    "GROUP_CYCLIC",
    "GROUP_DIHEDRAL",
    "GROUP_AFFINE",
    "GROUP_SUBGROUP",
    "FiniteGroup",
    "CosetPartition",
    "CrossSection",
    "build_group",
    "check_group_axioms",
    "is_abelian",
    "find_noncommuting_pair",
    "element_order",
    "subgroup_group",
    "coset_partition",
    "left_cosets",
    "default_cross_section",
    "cross_section",
    "is_coset_admissible",
    "count_admissible_sets",
    "iter_admissible_sets",
]

logger = logging.getLogger(__name__)

GROUP_CYCLIC = "cyclic"
GROUP_DIHEDRAL = "dihedral"
GROUP_AFFINE = "affine"
GROUP_SUBGROUP = "subgroup"

_BUILDABLE_KINDS = (GROUP_CYCLIC, GROUP_DIHEDRAL, GROUP_AFFINE)


def _frozen(array: np.ndarray) -> np.ndarray:
    array.setflags(write=False)
    return array


@dataclass(frozen=True, eq=False)
class FiniteGroup:
    """Konkrete endliche Gruppe über ihrer Cayley-Tafel.

    ``params`` hält die Parametrisierung jedes Elements (``(k,)`` zyklisch,
    ``(a, b)`` dihedral, ``(k, l)`` affin). Für Untergruppen, die über
    :func:`subgroup_group` als eigene Gruppe geführt werden, verweist
    ``embedding`` auf die Indizes in der umgebenden Gruppe.
    """

    kind: str
    param: int
    cayley: np.ndarray
    inverse: np.ndarray
    identity: int
    labels: Tuple[str, ...]
    params: Tuple[Tuple[int, ...], ...]
    embedding: Optional[Tuple[int, ...]] = None

    @property
    def order(self) -> int:
        return int(self.cayley.shape[0])

    def mul(self, a: int, b: int) -> int:
        return int(self.cayley[a, b])

    def inv(self, a: int) -> int:
        return int(self.inverse[a])

    def descriptor(self) -> dict:
        """Strukturierter Textdatensatz für Konfigurationen und CSV-Zeilen."""

        return {"kind": self.kind, "param": self.param}

    @property
    def name(self) -> str:
        if self.kind == GROUP_CYCLIC:
            return f"Z/{self.param}"
        if self.kind == GROUP_DIHEDRAL:
            return f"D_{self.param}"
        if self.kind == GROUP_AFFINE:
            return f"Aff({self.param})"
        return f"H<{self.order}>"


def _finish(
    kind: str,
    param: int,
    cayley: np.ndarray,
    labels: Sequence[str],
    params: Sequence[Tuple[int, ...]],
    embedding: Optional[Tuple[int, ...]] = None,
) -> FiniteGroup:
    cayley = np.asarray(cayley, dtype=np.int64)
    order = cayley.shape[0]
    identity_candidates = np.flatnonzero(
        np.all(cayley == np.arange(order)[None, :], axis=1)
    )
    if identity_candidates.size == 0:
        raise GroupConstructionError(f"Cayley-Tafel von {kind}({param}) ohne neutrales Element.")
    identity = int(identity_candidates[0])
    # inverse[a] ist die eindeutige Spalte b mit cayley[a, b] == identity
    rows, cols = np.nonzero(cayley == identity)
    inverse = np.full(order, -1, dtype=np.int64)
    inverse[rows] = cols
    if np.any(inverse < 0):
        raise GroupConstructionError(f"Nicht jedes Element von {kind}({param}) ist invertierbar.")
    return FiniteGroup(
        kind=kind,
        param=int(param),
        cayley=_frozen(cayley),
        inverse=_frozen(inverse),
        identity=identity,
        labels=tuple(labels),
        params=tuple(tuple(int(v) for v in p) for p in params),
        embedding=embedding,
    )


def _cyclic(n: int) -> FiniteGroup:
    k = np.arange(n)
    cayley = (k[:, None] + k[None, :]) % n
    return _finish(GROUP_CYCLIC, n, cayley, [str(v) for v in k], [(int(v),) for v in k])


def _dihedral(n: int) -> FiniteGroup:
    # r^a s^b · r^c s^d = r^(a + (-1)^b c) s^(b+d)
    idx = np.arange(2 * n)
    a, b = idx % n, idx // n
    sign = np.where(b == 1, -1, 1)
    new_a = (a[:, None] + sign[:, None] * a[None, :]) % n
    new_b = (b[:, None] + b[None, :]) % 2
    cayley = new_a + n * new_b
    labels = []
    for ai, bi in zip(a, b):
        rot = "e" if ai == 0 else f"r^{ai}"
        if bi == 0:
            labels.append(rot)
        else:
            labels.append("s" if ai == 0 else f"{rot}s")
    return _finish(GROUP_DIHEDRAL, n, cayley, labels, list(zip(a.tolist(), b.tolist())))


def _affine(p: int) -> FiniteGroup:
    if not isprime(p):
        raise GroupConstructionError(
            f"Die affine Gruppe braucht einen Primzahlparameter, erhalten: {p} ist keine Primzahl."
        )
    idx = np.arange(p * (p - 1))
    k, l = idx % p, idx // p + 1
    # (k,l)(k',l') = (k + l k' mod p, l l' mod p)
    new_k = (k[:, None] + l[:, None] * k[None, :]) % p
    new_l = (l[:, None] * l[None, :]) % p
    cayley = (new_l - 1) * p + new_k
    labels = [f"({ki},{li})" for ki, li in zip(k, l)]
    return _finish(GROUP_AFFINE, p, cayley, labels, list(zip(k.tolist(), l.tolist())))


def build_group(kind: str, param: int) -> FiniteGroup:
    """Baut ``Z/n``, ``D_n`` (Ordnung 2n) oder die affine Gruppe (Ordnung p(p-1))."""

    kind = str(kind).strip().lower()
    try:
        param = int(param)
    except (TypeError, ValueError) as exc:
        raise GroupConstructionError(f"Gruppenparameter muss ganzzahlig sein: {param!r}") from exc

    if kind not in _BUILDABLE_KINDS:
        raise GroupConstructionError(
            f"Unbekannter Gruppentyp '{kind}'. Erlaubt: {', '.join(_BUILDABLE_KINDS)}."
        )
    if param < 1:
        raise GroupConstructionError(f"Gruppenparameter muss ≥ 1 sein, erhalten: {param}")

    if kind == GROUP_CYCLIC:
        group = _cyclic(param)
    elif kind == GROUP_DIHEDRAL:
        group = _dihedral(param)
    else:
        group = _affine(param)
    logger.debug("Gruppe %s mit Ordnung %d gebaut", group.name, group.order)
    return group


def check_group_axioms(G: FiniteGroup) -> None:
    """Prüft alle Gruppenaxiome erschöpfend und nennt das erste verletzte.

    Laufzeit O(|G|³); für |G| ≤ 64 unproblematisch.
    """

    n = G.order
    C = G.cayley
    every = np.arange(n)
    if C.shape != (n, n) or C.min() < 0 or C.max() >= n:
        raise InvariantViolation("cayley_range", "Einträge außerhalb von 0…|G|-1")
    if not (np.all(C[G.identity] == every) and np.all(C[:, G.identity] == every)):
        raise InvariantViolation("identity", f"Element {G.identity} ist nicht neutral")
    if not np.all(C[every, G.inverse] == G.identity):
        raise InvariantViolation("inverse", "cayley[a][inverse[a]] ≠ identity")
    sorted_rows = np.sort(C, axis=1)
    sorted_cols = np.sort(C, axis=0)
    if not (np.all(sorted_rows == every[None, :]) and np.all(sorted_cols == every[:, None])):
        raise InvariantViolation("latin_square", "Zeile oder Spalte ist keine Permutation")
    # (ab)c gegen a(bc) für alle Tripel
    lhs = C[C[:, :, None], every[None, None, :]]
    rhs = C[every[:, None, None], C[None, :, :]]
    bad = np.argwhere(lhs != rhs)
    if bad.size:
        a, b, c = (int(v) for v in bad[0])
        raise InvariantViolation("associativity", f"(g{a}·g{b})·g{c} ≠ g{a}·(g{b}·g{c})")


def find_noncommuting_pair(G: FiniteGroup) -> Optional[Tuple[int, int]]:
    """Liefert ein Paar (a, b) mit ab ≠ ba oder ``None`` für abelsche Gruppen."""

    diff = np.argwhere(G.cayley != G.cayley.T)
    if diff.size == 0:
        return None
    return int(diff[0, 0]), int(diff[0, 1])


def is_abelian(G: FiniteGroup) -> bool:
    return find_noncommuting_pair(G) is None


def element_order(G: FiniteGroup, a: int) -> int:
    order, current = 1, a
    while current != G.identity:
        current = int(G.cayley[current, a])
        order += 1
    return order


@dataclass(frozen=True, eq=False)
class CosetPartition:
    """Zerlegung von G in Rechtsnebenklassen ``Hg``."""

    parent: FiniteGroup
    subgroup: Tuple[int, ...]
    cosets: Tuple[Tuple[int, ...], ...]
    coset_of: np.ndarray
    is_normal: bool

    @property
    def index(self) -> int:
        return len(self.cosets)


@dataclass(frozen=True, eq=False)
class CrossSection:
    """Ein Repräsentant γ(υ) pro Nebenklasse υ."""

    partition: CosetPartition
    representative: Tuple[int, ...]


def _check_subgroup(G: FiniteGroup, H: Sequence[int]) -> None:
    if not H:
        raise SubgroupError("identity", "leere Menge enthält das neutrale Element nicht")
    members = set(H)
    for h in H:
        if not 0 <= h < G.order:
            raise SubgroupError("range", f"Index {h} liegt nicht in G")
    if G.identity not in members:
        raise SubgroupError("identity", f"neutrales Element {G.identity} fehlt")
    for a in H:
        for b in H:
            if int(G.cayley[a, b]) not in members:
                raise SubgroupError("closure", f"g{a}·g{b} = g{int(G.cayley[a, b])} liegt nicht in H")
    for a in H:
        if int(G.inverse[a]) not in members:
            raise SubgroupError("inverses", f"Inverses von g{a} liegt nicht in H")


def coset_partition(G: FiniteGroup, H: Iterable[int]) -> CosetPartition:
    """Zerlegt G in die Rechtsnebenklassen ``Hg`` (sortiert nach kleinstem Element)."""

    subgroup = tuple(sorted({int(h) for h in H}))
    _check_subgroup(G, subgroup)

    H_arr = np.asarray(subgroup)
    coset_of = np.full(G.order, -1, dtype=np.int64)
    cosets = []
    for g in range(G.order):
        if coset_of[g] >= 0:
            continue
        members = np.unique(G.cayley[H_arr, g])
        coset_of[members] = len(cosets)
        cosets.append(tuple(int(v) for v in members))

    # gHg⁻¹ = H für alle g
    members_set = set(subgroup)
    is_normal = True
    for g in range(G.order):
        conj = G.cayley[G.cayley[g, H_arr], G.inverse[g]]
        if set(int(v) for v in conj) != members_set:
            is_normal = False
            break

    return CosetPartition(
        parent=G,
        subgroup=subgroup,
        cosets=tuple(cosets),
        coset_of=_frozen(coset_of),
        is_normal=is_normal,
    )


def left_cosets(P: CosetPartition) -> Tuple[Tuple[int, ...], ...]:
    """Linksnebenklassen ``gH`` in derselben Sortierung wie ``P.cosets``."""

    G = P.parent
    H_arr = np.asarray(P.subgroup)
    seen: set[int] = set()
    result = []
    for g in range(G.order):
        if g in seen:
            continue
        members = tuple(int(v) for v in np.unique(G.cayley[g, H_arr]))
        seen.update(members)
        result.append(members)
    return tuple(result)


def default_cross_section(P: CosetPartition) -> CrossSection:
    """Kleinster Elementindex pro Nebenklasse."""

    return CrossSection(partition=P, representative=tuple(c[0] for c in P.cosets))


def cross_section(P: CosetPartition, representatives: Sequence[int]) -> CrossSection:
    reps = tuple(int(r) for r in representatives)
    if len(reps) != P.index:
        raise SubgroupError(
            "cross_section", f"{len(reps)} Repräsentanten für {P.index} Nebenklassen"
        )
    for coset_id, r in enumerate(reps):
        if not 0 <= r < P.parent.order or int(P.coset_of[r]) != coset_id:
            raise SubgroupError("cross_section", f"g{r} liegt nicht in Nebenklasse {coset_id}")
    return CrossSection(partition=P, representative=reps)


def subgroup_group(G: FiniteGroup, H: Iterable[int]) -> FiniteGroup:
    """Führt die Untergruppe H als eigene Gruppe mit Einbettung in G."""

    subgroup = tuple(sorted({int(h) for h in H}))
    _check_subgroup(G, subgroup)
    position = {h: i for i, h in enumerate(subgroup)}
    H_arr = np.asarray(subgroup)
    table = G.cayley[np.ix_(H_arr, H_arr)]
    local = np.vectorize(position.__getitem__)(table)
    return _finish(
        GROUP_SUBGROUP,
        len(subgroup),
        local,
        [G.labels[h] for h in subgroup],
        [G.params[h] for h in subgroup],
        embedding=subgroup,
    )


def is_coset_admissible(omega: Iterable[int], P: CosetPartition) -> bool:
    """Wahr, wenn Ω höchstens ein Element pro Nebenklasse enthält."""

    seen: set[int] = set()
    for g in set(int(w) for w in omega):
        coset = int(P.coset_of[g])
        if coset in seen:
            return False
        seen.add(coset)
    return True


def count_admissible_sets(P: CosetPartition) -> int:
    """Anzahl zulässiger Mengen: (1 + |H|)^{|H\\G|}, leere Menge eingeschlossen."""

    return (1 + len(P.subgroup)) ** P.index


def iter_admissible_sets(P: CosetPartition, *, include_empty: bool = False) -> Iterator[Tuple[int, ...]]:
    """Zählt alle zulässigen Mengen auf (pro Nebenklasse: keins oder ein Element)."""

    choices = [(None,) + coset for coset in P.cosets]
    for combo in itertools.product(*choices):
        omega = tuple(sorted(g for g in combo if g is not None))
        if omega or include_empty:
            yield omega
