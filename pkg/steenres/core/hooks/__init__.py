from .abstract import (
    BaseStepHook
)
