import ujson

from .exceptions import ParamError
from .freemod import FreeElement
from .milnor import canonical
from ..settings import DefaultConfig as config

CHECKPOINT_FORMAT = "steenres-checkpoint"
CHART_FORMAT = "steenres-chart"


def dumps(obj):
    return ujson.dumps(obj, sort_keys=True, ensure_ascii=True, escape_forward_slashes=False)


def loads(text):
    return ujson.loads(text)


class Prepare:
    """
    Builders of the JSON records written to checkpoints, cycle files and charts.
    """

    @classmethod
    def exponent(cls, r):
        return list(r)

    @classmethod
    def free_element(cls, x):
        """
        :return: [[exponents, [s, index]], ...] in basis order
        """
        return [[cls.exponent(r), [gen.s, gen.index]] for r, gen in x.sorted_terms()]

    @classmethod
    def checkpoint_header(cls, res, strategy=""):
        return {
            "record": "header",
            "format": CHECKPOINT_FORMAT,
            "version": config.CHECKPOINT_VERSION,
            "prime": 2,
            "frontier": [[s, t] for s, t in res.frontier.items()],
            "strategy": strategy,
            "basis_order": config.BASIS_ORDER,
        }

    @classmethod
    def generator_record(cls, gen):
        return {
            "record": "gen",
            "s": gen.s,
            "index": gen.index,
            "t": gen.t,
            "d": cls.free_element(gen.differential),
        }

    @classmethod
    def step_record(cls, s, t, method):
        return {"record": "step", "s": s, "t": t, "via": method}

    @classmethod
    def chart_header(cls):
        return {"format": CHART_FORMAT, "version": config.CHART_VERSION}

    @classmethod
    def chart_entry(cls, entry):
        return {"s": entry.s, "t": entry.t, "n": entry.n}


class Parse:
    """
    Inverse of :class:`Prepare`.
    """

    @classmethod
    def exponent(cls, data):
        if not isinstance(data, list):
            raise ParamError("Milnor exponent must be a JSON array, got {!r}".format(data))
        r = canonical(data)
        if len(r) != len(data):
            raise ParamError("Milnor exponent {!r} is not canonical".format(data))
        return r

    @classmethod
    def free_element(cls, data, res):
        """
        :type  res: Resolution
        :param res: resolves [s, index] to generators
        """
        if not isinstance(data, list):
            raise ParamError("free element must be a JSON array")
        terms = []
        for item in data:
            try:
                exps, (s, index) = item
            except (TypeError, ValueError):
                raise ParamError("malformed term {!r}".format(item))
            terms.append((cls.exponent(exps), res.generator((s, index)).ref))
        return FreeElement(terms)
