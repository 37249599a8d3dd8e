"""
Lemma Registry for MorseLab

Provides a registry for looking up lemma checks by id.
"""

from ..exceptions import UnknownLemmaError
from .lemma_base import LemmaCheck

ALL_LEMMAS = "all"


class LemmaRegistry:
    """
    Registry for lemma checks.

    Keeps registration order, which is also the order "all" runs them in.
    """

    def __init__(self):
        """
        Initialize the lemma registry.

        @brief Initialize empty lemma registry.
        """
        self._lemmas: dict[str, type[LemmaCheck]] = {}

    def register(self, lemma_id: str, lemma_class: type[LemmaCheck]) -> None:
        """
        Register a lemma check.

        @brief Register a lemma class under its id.
        @param lemma_id Lemma id
        @param lemma_class Class that inherits from LemmaCheck
        @throws ValueError If the id is already registered or reserved
        """
        if lemma_id == ALL_LEMMAS:
            raise ValueError(f"Lemma id '{ALL_LEMMAS}' is reserved")
        if lemma_id in self._lemmas:
            raise ValueError(f"Lemma '{lemma_id}' is already registered")

        self._lemmas[lemma_id] = lemma_class

    def unregister(self, lemma_id: str) -> None:
        """
        Unregister a lemma check.

        @brief Remove a lemma from the registry.
        @param lemma_id Lemma id
        @throws UnknownLemmaError If the id is not registered
        """
        if lemma_id not in self._lemmas:
            raise UnknownLemmaError(f"Lemma '{lemma_id}' not found in registry")

        del self._lemmas[lemma_id]

    def get_lemma(self, lemma_id: str) -> type[LemmaCheck]:
        """
        Get a registered lemma check.

        @brief Get lemma class by id.
        @param lemma_id Lemma id
        @return Lemma class
        @throws UnknownLemmaError If the id is not registered
        """
        if lemma_id not in self._lemmas:
            raise UnknownLemmaError(
                f"Lemma '{lemma_id}' not found in registry",
                {"known": ", ".join(self._lemmas)},
            )

        return self._lemmas[lemma_id]

    def resolve(self, lemma_id: str) -> list[str]:
        """
        Expand "all" to every registered id.

        @brief Ids selected by a --lemma argument.
        @throws UnknownLemmaError If the id is not registered
        """
        if lemma_id == ALL_LEMMAS:
            return self.list_lemmas()
        self.get_lemma(lemma_id)
        return [lemma_id]

    def list_lemmas(self) -> list[str]:
        """
        List all registered lemma ids.

        @brief Get registered ids in registration order.
        @return List of lemma ids
        """
        return list(self._lemmas.keys())

    def is_registered(self, lemma_id: str) -> bool:
        return lemma_id in self._lemmas

    def get_lemma_count(self) -> int:
        return len(self._lemmas)

    def clear(self) -> None:
        """
        Clear all registered lemmas.

        @brief Remove all lemmas from registry.
        """
        self._lemmas.clear()


# Global lemma registry instance
lemma_registry = LemmaRegistry()


def register_lemma(lemma_class: type[LemmaCheck]) -> type[LemmaCheck]:
    """
    Register a lemma check with the global registry under its lemma_id.

    @brief Class decorator for lemma checks.
    @param lemma_class Class that inherits from LemmaCheck
    @return The class, unchanged
    """
    lemma_registry.register(lemma_class.lemma_id, lemma_class)
    return lemma_class


def get_lemma(lemma_id: str) -> type[LemmaCheck]:
    """
    Get a lemma check from the global registry.

    @brief Convenience function to get a lemma class.
    """
    return lemma_registry.get_lemma(lemma_id)


def list_lemmas() -> list[str]:
    return lemma_registry.list_lemmas()
