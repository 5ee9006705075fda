# -*- coding: utf-8 -*-

from .core.stub import Resolver
from .core.prepare import Prepare, Parse
from .core.resolution import Resolution
from .core.freemod import FreeElement
from .core.strategy import Strategy
from .core.subalgebra import Subalgebra, make_subalgebra, preset
from .core.abstract import Chart, VerifyReport
from .core.types import Status, Regime, ChartFormat, ViolationKind
from .core.exceptions import (
    ParamError,
    NotAdmissible,
    EngineError,
    NotApplicable,
    LiftFailed,
    NotACycle,
    CheckpointError
)
from .core import __version__

__all__ = ['Resolver', 'Prepare', 'Parse', 'Resolution', 'FreeElement', 'Strategy',
           'Subalgebra', 'make_subalgebra', 'preset', 'Chart', 'VerifyReport',
           'Status', 'Regime', 'ChartFormat', 'ViolationKind',
           'ParamError', 'NotAdmissible', 'EngineError', 'NotApplicable', 'LiftFailed',
           'NotACycle', 'CheckpointError',
           '__version__']
