"""
Chart export as JSON, TSV or an SVG Adams chart.
"""
import logging

import matplotlib

matplotlib.use("Agg")
import matplotlib.pyplot as plt  # noqa: E402

from .abstract import Chart  # noqa: E402
from .exceptions import CheckpointError, ParamError  # noqa: E402
from .prepare import CHART_FORMAT, Prepare, dumps, loads  # noqa: E402
from .types import ChartFormat  # noqa: E402
from ..settings import DefaultConfig as config  # noqa: E402

LOGGER = logging.getLogger(__name__)

TSV_HEADER = "# {} v{}".format(CHART_FORMAT, config.CHART_VERSION)


def to_json(chart):
    return dumps([Prepare.chart_header()] + [Prepare.chart_entry(e) for e in chart.entries()])


def to_tsv(chart):
    lines = [TSV_HEADER]
    lines.extend("{}\t{}\t{}".format(s, t, n) for s, t, n in chart.triples())
    return "\n".join(lines) + "\n"


def from_json(text):
    data = loads(text)
    if not data or data[0] != Prepare.chart_header():
        raise CheckpointError("not a version {} steenres chart".format(config.CHART_VERSION))
    return Chart((e["s"], e["t"], e["n"]) for e in data[1:])


def from_tsv(text):
    lines = text.splitlines()
    if not lines or lines[0] != TSV_HEADER:
        raise CheckpointError("not a version {} steenres chart".format(config.CHART_VERSION))
    entries = []
    for line in lines[1:]:
        if line:
            s, t, n = line.split("\t")
            entries.append((int(s), int(t), int(n)))
    return Chart(entries)


def render_svg(chart, path, title=None):
    """
    Adams chart: stem t - s across, s up, one dot per generator.
    """
    width = max(chart.max_stem(), 1)
    height = max(chart.max_s(), 1)
    fig, ax = plt.subplots(figsize=(max(4.0, 0.35 * (width + 2)), max(3.0, 0.35 * (height + 2))))
    try:
        xs, ys = [], []
        for e in chart.entries():
            stem = e.t - e.s
            for k in range(e.n):
                # spread several generators of one bidegree across the cell
                offset = 0.0 if e.n == 1 else (k / (e.n - 1) - 0.5) * 0.5
                xs.append(stem + offset)
                ys.append(e.s)
        ax.scatter(xs, ys, s=12, color="black", zorder=3)
        ax.set_xlim(-0.5, width + 0.5)
        ax.set_ylim(-0.5, height + 0.5)
        ax.set_xticks(range(0, width + 1, 2 if width > 20 else 1))
        ax.set_yticks(range(0, height + 1))
        ax.grid(True, color="#dddddd", linewidth=0.5, zorder=0)
        ax.set_aspect("equal")
        ax.set_xlabel("t - s")
        ax.set_ylabel("s")
        if title:
            ax.set_title(title)
        fig.savefig(path, format="svg", bbox_inches="tight")
    finally:
        plt.close(fig)
    LOGGER.info("wrote SVG chart with %d bidegrees to %s", len(chart), path)


def write(chart, fmt, path):
    """
    :type  fmt: ChartFormat or str
    :param fmt: json, tsv or svg
    """
    if isinstance(fmt, str):
        try:
            fmt = ChartFormat[fmt.upper()]
        except KeyError:
            raise ParamError("format `{}` is illegal".format(fmt))
    if fmt == ChartFormat.SVG:
        render_svg(chart, path)
        return
    text = to_json(chart) if fmt == ChartFormat.JSON else to_tsv(chart)
    with open(path, 'w') as f:
        f.write(text)
    LOGGER.info("wrote %s chart with %d bidegrees to %s", fmt, len(chart), path)
