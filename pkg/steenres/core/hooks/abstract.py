class AbstractHook:
    pass


class BaseStepHook(AbstractHook):
    """
    Base class of step hooks. The engine calls them around every extension step.
    """

    def pre_step(self, s, t, subalgebra):
        """
        Called before extending at (s, t); subalgebra is None for a naive step.
        """
        pass

    def aft_step(self, s, t, count):
        """
        Called after extending at (s, t) with the number of new generators.
        """
        pass

    def on_record(self, record):
        """
        Receives every StatsRecord the engine produces.
        """
        pass

    def aft_degree(self, t):
        """
        Called once every s of internal degree t has been extended.
        """
        pass
