"""
Lemma checks.

Every check is registered under its id on import. Graph lemmas run over the
enumerated graphs; partition complex lemmas run over 4 <= n <= sigma_max_n.
"""

from collections.abc import Hashable
from functools import reduce
from itertools import combinations

from ..graph.basepointed_graph import BasepointedGraph
from ..graph.blowups import blow_up, is_descending_blow_up
from ..graph.forests import (
    candidate_forests,
    collapse_forest,
    has_unique_descending_edge,
    is_descending_forest,
    separating_edges,
    unique_descending_edge_vertices,
)
from ..graph.height import Ordering, compare_heights, height
from ..partitions.blowup_posets import sbu_complex, weak_sbu_complex
from ..partitions.partition import TwoBlockPartition, is_compatible, splits
from ..partitions.sigma import (
    PartitionComplexSpec,
    RelativeLink,
    is_labelled_subcomplex,
    labelled_simplices,
    relative_link_decomposition,
    sigma,
    sigma_filtration,
    size_m_new_vertices,
)
from ..topology.collapse import free_face_collapse
from ..topology.homology import (
    HomologyProfile,
    ProfileKind,
    classify,
    classify_profile,
    join_profile,
    reduced_homology,
)
from ..topology.poset import Poset, order_complex
from ..topology.simplicial_complex import join
from .lemma_base import GraphLemmaCheck, SigmaLemmaCheck
from .lemma_registry import register_lemma
from .links import (
    UP_LINK_VARIANTS,
    UpLinkCaps,
    caps_truncate,
    descending_link_profile,
    down_link,
    farthest_edge_link_check,
    farthest_edges,
    graph_blow_ups,
    up_link_complex,
)
from .report import Verdict, VerificationReport


def morse_index(g: BasepointedGraph) -> int:
    """k: the sum of degree(v) - 2 over the non-basepoint vertices."""
    return sum(g.degree(v) - 2 for v in g.non_basepoint_vertices())


def up_link_model_profile(g: BasepointedGraph, compat: str = "paper") -> HomologyProfile:
    """Homology of the join of the SBU(v), from the factors."""
    profiles = [reduced_homology(sbu_complex(g, v, compat)) for v in g.non_basepoint_vertices()]
    return reduce(join_profile, profiles, HomologyProfile.of_void())


@register_lemma
class ForestHeightLemma(GraphLemmaCheck):
    lemma_id = "forest-height"
    description = "Blowing down a forest lowers the height exactly when the forest is descending"
    expected = "h(g/F) != h(g), and h(g/F) < h(g) iff F is descending"

    def check(self, g: BasepointedGraph) -> VerificationReport:
        base = height(g)
        order = self.config.height_order
        count = 0
        for f in candidate_forests(g):
            ordering = compare_heights(height(collapse_forest(g, f)), base, order)
            descending = is_descending_forest(g, f)
            count += 1
            if ordering is Ordering.EQ or (ordering is Ordering.LT) != descending:
                return self.report(
                    g,
                    Verdict.FAIL,
                    notes=[f"forest {f}: {ordering.name}, descending={descending}"],
                    reproducer={"graph": g.to_dict(), "forest": sorted(f.edges)},
                )
        return self.report(g, Verdict.PASS, notes=[f"{count} forests ({order} order)"])


@register_lemma
class BlowUpHeightLemma(GraphLemmaCheck):
    lemma_id = "blowup-height"
    description = "A blow-up lowers the height exactly when it separates on level D(B)"
    expected = "h(g^B) != h(g), and h(g^B) < h(g) iff B is descending"

    def check(self, g: BasepointedGraph) -> VerificationReport:
        caps = UpLinkCaps.from_run_config(self.config)
        blow_ups = graph_blow_ups(g, "paper", caps, skip_large_vertices=True)
        base = height(g)
        order = self.config.height_order
        for b in blow_ups:
            ordering = compare_heights(height(blow_up(g, b)), base, order)
            descending = is_descending_blow_up(g, b)
            if ordering is Ordering.EQ or (ordering is Ordering.LT) != descending:
                return self.report(
                    g,
                    Verdict.FAIL,
                    notes=[f"blow-up {b}: {ordering.name}, descending={descending}"],
                    reproducer={"graph": g.to_dict(), "blowup": str(b)},
                )
        notes = [f"{len(blow_ups)} blow-ups ({order} order)"]
        if caps_truncate(g, caps) or any(
            g.degree(v) > caps.max_blowup_degree for v in g.non_basepoint_vertices()
        ):
            notes.append("enumeration caps applied")
        return self.report(g, Verdict.PASS, notes=notes)


@register_lemma
class DownLinkLemma(GraphLemmaCheck):
    lemma_id = "down-link"
    description = "The down-link is a wedge of (V-2)-spheres or contractible"
    expected = "Wedge(V-2) or AcyclicPoint"

    def check(self, g: BasepointedGraph) -> VerificationReport:
        profile = reduced_homology(down_link(g))
        dimension = g.vertex_count - 2
        holds = classify_profile(profile).is_spherical(dimension)
        return self.profile_report(g, profile, holds, expected=f"spherical({dimension})")


@register_lemma
class DownLinkUniqueLemma(GraphLemmaCheck):
    lemma_id = "down-link-unique"
    description = "The down-link is contractible with a unique descending or separating edge"
    expected = "AcyclicPoint"

    def applies_to(self, g: BasepointedGraph) -> bool:
        return has_unique_descending_edge(g) or bool(separating_edges(g))

    def check(self, g: BasepointedGraph) -> VerificationReport:
        x = down_link(g)
        profile = reduced_homology(x)
        notes = []
        unique = sorted(unique_descending_edge_vertices(g))
        if unique:
            notes.append(f"unique descending edge at {unique}")
        separating = separating_edges(g)
        if separating:
            notes.append(f"separating edges {list(separating)}")
        report = self.profile_report(g, profile, classify_profile(profile).is_acyclic, notes=notes)
        if not report.failed:
            core = free_face_collapse(x)
            if len(core) == 1:
                report.verdict = Verdict.PASS_STRONG
            else:
                notes.append(f"greedy collapse stopped at {len(core)} simplices")
        return report


@register_lemma
class DownLinkInductionLemma(GraphLemmaCheck):
    lemma_id = "down-link-induction"
    description = "The link of a farthest edge in P(g) has the homology of P(g/e)"
    expected = "link({e}) ~ P(g/e)"

    def applies_to(self, g: BasepointedGraph) -> bool:
        return g.vertex_count > 1

    def check(self, g: BasepointedGraph) -> VerificationReport:
        result = farthest_edge_link_check(g)
        if result is None:
            note = f"a farthest edge in {list(farthest_edges(g))} is horizontal"
            return self.report(g, Verdict.PASS, notes=[note])
        comparisons = {
            "quotient": str(classify_profile(result.quotient_profile)),
            "remainder": str(classify_profile(result.remainder_profile)),
            "deletion": (
                str(classify_profile(result.deletion_profile))
                if result.deletion_profile is not None
                else "disconnected"
            ),
            "bijection": "yes" if result.bijective else "no",
        }
        report = self.profile_report(
            g,
            result.link_profile,
            result.homology_agrees,
            comparisons=comparisons,
            notes=[f"edge {result.edge}"],
        )
        if not report.failed and result.bijective:
            report.verdict = Verdict.PASS_STRONG
        return report


@register_lemma
class SigmaSphericalLemma(SigmaLemmaCheck):
    lemma_id = "sigma-spherical"
    description = "Every stage of the partition complex filtration is (n-4)-spherical"
    expected = "Wedge(n-4) or AcyclicPoint"

    def instances(self) -> list[Hashable]:
        return [spec for n in self.sizes() for spec in sigma_filtration(n)]

    def describe_instance(self, spec: PartitionComplexSpec) -> str:
        return spec.to_spec_string()

    def reproducer(self, spec: PartitionComplexSpec) -> dict:
        return {"spec": spec.to_spec_string(), "compat": self.config.compat}

    def check(self, spec: PartitionComplexSpec) -> VerificationReport:
        profile = reduced_homology(sigma(spec, self.config.compat))
        holds = classify_profile(profile).is_spherical(spec.n - 4)
        return self.profile_report(spec, profile, holds, expected=f"spherical({spec.n - 4})")


def _boundary_subdivision(size: int) -> Poset:
    """Nonempty proper subsets of {0..size-1} under inclusion."""
    subsets = [frozenset(c) for r in range(1, size) for c in combinations(range(size), r)]
    return Poset.from_order(subsets, lambda a, b: a < b)


@register_lemma
class SigmaBaseLemma(SigmaLemmaCheck):
    lemma_id = "sigma-base"
    description = "Sigma(n,2) is the subdivided boundary of an (n-3)-simplex"
    expected = "Wedge(n-4,1)"

    def instances(self) -> list[Hashable]:
        return list(self.sizes())

    def describe_instance(self, n: int) -> str:
        return PartitionComplexSpec(n, 2).to_spec_string()

    def check(self, n: int) -> VerificationReport:
        x = sigma(PartitionComplexSpec(n, 2), self.config.compat)
        # a_p minus 1 is a nonempty proper subset of {3..n}
        relabel = {p: frozenset(i - 3 for i in p.a - {1}) for p in x.labels or ()}
        mapped = frozenset(frozenset(relabel[p] for p in s) for s in labelled_simplices(x))
        isomorphic = mapped == labelled_simplices(order_complex(_boundary_subdivision(n - 2)))
        profile = reduced_homology(x)
        c = classify_profile(profile)
        holds = isomorphic and c.is_wedge_of(n - 4) and c.count == 1
        notes = [] if isomorphic else ["not isomorphic to the subdivided boundary"]
        return self.profile_report(n, profile, holds, notes=notes)


@register_lemma
class SigmaFiltrationLemma(SigmaLemmaCheck):
    lemma_id = "sigma-filtration"
    description = "The stages are nested and new size-m vertices are pairwise incompatible"
    expected = "nested stages, independent new vertices"

    def instances(self) -> list[Hashable]:
        return list(self.sizes())

    def describe_instance(self, n: int) -> str:
        return f"sigma:n={n}"

    def check(self, n: int) -> VerificationReport:
        compat = self.config.compat
        stages = sigma_filtration(n)
        complexes = [sigma(spec, compat) for spec in stages]
        for i in range(len(stages) - 1):
            if not is_labelled_subcomplex(complexes[i], complexes[i + 1]):
                return self.report(
                    n, Verdict.FAIL, notes=[f"{stages[i]} is not inside {stages[i + 1]}"]
                )
        for k in range(3, n):
            for m in range(2, n + 1):
                for u, v in combinations(size_m_new_vertices(n, k, m), 2):
                    if is_compatible(u, v, compat):
                        return self.report(
                            n, Verdict.FAIL, notes=[f"{u} and {v} are compatible (k={k}, m={m})"]
                        )
        return self.report(n, Verdict.PASS, notes=[f"{len(stages)} stages"])


@register_lemma
class RelativeLinkLemma(SigmaLemmaCheck):
    lemma_id = "relative-link"
    description = "Relative links of new size-m vertices split as a join and are (n-5)-spherical"
    expected = "S^(m-3) * (Void, AcyclicPoint or S^(n-m-3)), spherical(n-5)"

    def instances(self) -> list[Hashable]:
        return [
            (n, k, m)
            for n in self.sizes()
            for k in range(3, n)
            for m in range(2, n - 1)
            if size_m_new_vertices(n, k, m)
        ]

    def describe_instance(self, instance: tuple[int, int, int]) -> str:
        n, k, m = instance
        return PartitionComplexSpec(n, k, m).to_spec_string()

    def check(self, instance: tuple[int, int, int]) -> VerificationReport:
        n, k, m = instance
        first = None
        for v in size_m_new_vertices(n, k, m):
            rl = relative_link_decomposition(n, k, m, v, "paper")
            profile = reduced_homology(rl.link)
            first = first or profile
            problem = self._problem(n, k, m, v, rl, profile)
            if problem:
                return self.profile_report(
                    instance,
                    profile,
                    False,
                    notes=[f"vertex {v}: {problem}"],
                    reproducer={"spec": self.describe_instance(instance), "vertex": str(v)},
                )
        comparisons = {}
        if 2 <= k - 1 <= n - m + 1:
            reference = classify(sigma(PartitionComplexSpec(n - m + 1, k - 1)))
            comparisons[str(PartitionComplexSpec(n - m + 1, k - 1))] = str(reference)
        count = len(size_m_new_vertices(n, k, m))
        return self.profile_report(
            instance, first, True, comparisons=comparisons, notes=[f"{count} vertices"]
        )

    @staticmethod
    def _problem(
        n: int,
        k: int,
        m: int,
        v: TwoBlockPartition,
        rl: RelativeLink,
        profile: HomologyProfile,
    ) -> str | None:
        if labelled_simplices(rl.link) != labelled_simplices(
            join(rl.right_to_left, rl.left_to_right)
        ):
            return "link is not the join of its two parts"
        right = classify(rl.right_to_left)
        if m == 2 and right.kind is not ProfileKind.VOID:
            return f"right-to-left part is {right}, expected Void"
        if m > 2 and not (right.is_wedge_of(m - 3) and right.count == 1):
            return f"right-to-left part is {right}, expected Wedge({m - 3},1)"
        left = classify(rl.left_to_right)
        if len(v.a) == k - 1:
            if not (left.is_wedge_of(n - m - 3) and left.count == 1):
                return f"left-to-right part is {left}, expected a sphere of dimension {n - m - 3}"
        elif not left.is_acyclic:
            return f"left-to-right part is {left}, expected AcyclicPoint"
        if not classify_profile(profile).is_spherical(n - 5):
            return f"link is {classify_profile(profile)}, expected spherical({n - 5})"
        return None


@register_lemma
class SbuSphericalLemma(GraphLemmaCheck):
    lemma_id = "sbu-spherical"
    description = "SBU(v) is a wedge of (degree(v)-4)-spheres when v has two descending edges"
    expected = "Wedge(degree-4) for d >= 2, Void otherwise"

    def check(self, g: BasepointedGraph) -> VerificationReport:
        comparisons = {}
        for v in g.non_basepoint_vertices():
            degree, d = g.degree(v), g.descending_count(v)
            x = sbu_complex(g, v, self.config.compat)
            c = classify(x)
            comparisons[f"v{v}"] = f"degree={degree} d={d} {c}"
            if self.config.sbu_mode == "weak" and degree <= self.config.max_blowup_degree:
                weak = classify(weak_sbu_complex(g, v, self.config.compat))
                comparisons[f"v{v}"] += f" weak={weak}"
            down = g.descending_labels(v)
            if any(not splits(x.label(i), down) for i in x.vertices()):
                return self.report(
                    g, Verdict.FAIL, comparisons=comparisons, notes=[f"v{v}: non-splitting vertex"]
                )
            holds = c.is_spherical(degree - 4) if d >= 2 and degree >= 4 else x.is_void
            if not holds:
                return self.report(g, Verdict.FAIL, comparisons=comparisons, notes=[f"v{v}: {c}"])
        return self.report(g, Verdict.PASS, comparisons=comparisons)


@register_lemma
class UpLinkModelLemma(GraphLemmaCheck):
    lemma_id = "up-link-model"
    description = "The join of the SBU(v) is a wedge of (k-V)-spheres"
    expected = "Wedge(k-V) or AcyclicPoint"

    def check(self, g: BasepointedGraph) -> VerificationReport:
        profile = up_link_model_profile(g, self.config.compat)
        c = classify_profile(profile)
        dimension = morse_index(g) - g.vertex_count
        if not has_unique_descending_edge(g):
            return self.profile_report(
                g, profile, c.is_spherical(dimension), expected=f"spherical({dimension})"
            )
        holds = c.kind is not ProfileKind.OTHER and (
            c.kind is not ProfileKind.WEDGE or c.dimension <= dimension
        )
        return self.profile_report(
            g,
            profile,
            holds,
            expected=f"spherical of dimension <= {dimension}",
            notes=["unique descending edge"],
        )


@register_lemma
class UpLinkLemma(GraphLemmaCheck):
    lemma_id = "up-link"
    description = "The up-link poset has the homology of the join of the SBU(v)"
    expected = "H(L) = H(A)"
    rank_limit = 2
    vertex_limit = 3

    def check(self, g: BasepointedGraph) -> VerificationReport:
        caps = UpLinkCaps.from_run_config(self.config)
        if caps_truncate(g, caps):
            return self.inconclusive(g, "partition cap truncates the blow-ups")
        compat, order = self.config.compat, self.config.height_order
        variant = self.config.sbu_mode
        model = up_link_model_profile(g, compat)
        profile = reduced_homology(up_link_complex(g, variant, compat, caps, order))
        comparisons = {"model": str(classify_profile(model))}
        for other in UP_LINK_VARIANTS:
            if other != variant:
                other_profile = reduced_homology(up_link_complex(g, other, compat, caps, order))
                comparisons[other] = str(classify_profile(other_profile))
        return self.profile_report(
            g, profile, profile == model, comparisons=comparisons, notes=[f"{variant} up-link"]
        )


@register_lemma
class DescendingLinkLemma(GraphLemmaCheck):
    lemma_id = "descending-link"
    description = "The descending link is a wedge of (k-1)-spheres or contractible"
    expected = "Wedge(k-1) or AcyclicPoint"

    def check(self, g: BasepointedGraph) -> VerificationReport:
        profile, explicit = descending_link_profile(
            g, self.config.compat, self.config.max_join_simplices
        )
        dimension = morse_index(g) - 1
        holds = classify_profile(profile).is_spherical(dimension)
        return self.profile_report(
            g,
            profile,
            holds,
            expected=f"spherical({dimension})",
            notes=["explicit join" if explicit else "join formula"],
        )
