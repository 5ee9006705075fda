from .exceptions import ParamError
from .types import ChartFormat, Regime


def _is_int(value):
    return not isinstance(value, bool) and isinstance(value, int)


def is_legal_max_stem(max_stem):
    return _is_int(max_stem) and max_stem >= 0


def is_legal_max_s(max_s):
    return max_s is None or (_is_int(max_s) and max_s >= 0)


def is_legal_threads(threads):
    return _is_int(threads) and threads >= 1


def is_legal_cache_size(size):
    return _is_int(size) and size >= 0


def is_legal_strategy(strategy):
    if not isinstance(strategy, str):
        return False
    return strategy in ("naive", "auto") or (strategy.startswith("fixed:") and len(strategy) > len("fixed:"))


def is_legal_format(fmt):
    if isinstance(fmt, ChartFormat):
        return True
    return isinstance(fmt, str) and fmt.upper() in ChartFormat.__members__


def is_legal_regime(regime):
    if isinstance(regime, Regime):
        return True
    return isinstance(regime, str) and regime.upper() in Regime.__members__


def is_legal_path(path):
    return isinstance(path, str) and len(path) > 0


def _raise_param_error(param_name):
    raise ParamError("{} is illegal".format(param_name))


_CHECKERS = {
    "max_stem": is_legal_max_stem,
    "max_s": is_legal_max_s,
    "threads": is_legal_threads,
    "cache": is_legal_cache_size,
    "strategy": is_legal_strategy,
    "format": is_legal_format,
    "regime": is_legal_regime,
    "checkpoint": is_legal_path,
    "out": is_legal_path,
}


def check_pass_param(*args, **kwargs):
    if kwargs is None:
        raise ParamError("Param should not be None")

    for key, value in kwargs.items():
        checker = _CHECKERS.get(key)
        if checker is None:
            raise ParamError("unknown param `{}`".format(key))
        if not checker(value):
            _raise_param_error(key)
