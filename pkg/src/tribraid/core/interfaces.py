from abc import ABC, abstractmethod

from tribraid.core.types import HomologyTable, LinkDiagram, NormalForm3, PartialTable


class HomologyEngine(ABC):
    """
    Interface for anything that can produce the full Khovanov table of a diagram.
    """

    @abstractmethod
    def homology(self, diagram: LinkDiagram) -> HomologyTable:
        """
        Computes every nontrivial group H^{i,j} of the diagram.
        """
        pass


class TableSynthesizer(ABC):
    """
    Interface for closed-form table constructions driven by a normal form.
    """

    @abstractmethod
    def synthesize(self, nf: NormalForm3) -> PartialTable:
        """
        Returns the partial table together with its determined region.
        """
        pass
