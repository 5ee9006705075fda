import pytest

from steenres.core import export
from steenres.core.abstract import Chart
from steenres.core.exceptions import CheckpointError, ParamError
from steenres.core.prepare import loads
from steenres.core.types import ChartFormat


@pytest.fixture
def chart():
    return Chart([(1, 2, 1), (0, 0, 1), (1, 1, 1), (2, 2, 1), (1, 4, 1), (3, 11, 1)])


class TestChart:
    def test_order(self, chart):
        assert chart.triples()[:4] == [(0, 0, 1), (1, 1, 1), (2, 2, 1), (1, 2, 1)]

    def test_lookup(self, chart):
        assert chart.count(1, 4) == 1
        assert chart.count(5, 5) == 0
        assert chart.degrees(1) == [1, 2, 4]
        assert chart.max_stem() == 8
        assert chart.max_s() == 3

    def test_positive_counts(self):
        with pytest.raises(ParamError):
            Chart([(1, 1, 0)])


class TestText:
    def test_json(self, chart):
        data = loads(export.to_json(chart))
        assert data[0] == {"format": "steenres-chart", "version": 1}
        assert data[1] == {"s": 0, "t": 0, "n": 1}
        assert export.from_json(export.to_json(chart)) == chart

    def test_tsv(self, chart):
        lines = export.to_tsv(chart).splitlines()
        assert lines[0] == "# steenres-chart v1"
        assert lines[1] == "0\t0\t1"
        assert export.from_tsv(export.to_tsv(chart)) == chart

    def test_same_triples(self, gsmall):
        chart = gsmall.chart()
        assert export.from_json(export.to_json(chart)).triples() == export.from_tsv(export.to_tsv(chart)).triples()

    @pytest.mark.parametrize("text", ["[]", '[{"format": "steenres-chart", "version": 2}]'])
    def test_bad_json(self, text):
        with pytest.raises(CheckpointError):
            export.from_json(text)

    def test_bad_tsv(self):
        with pytest.raises(CheckpointError):
            export.from_tsv("s\tt\tn\n1\t1\t1\n")


class TestWrite:
    @pytest.mark.parametrize("fmt", ["json", "tsv", ChartFormat.TSV])
    def test_text_formats(self, chart, tmp_path, fmt):
        path = str(tmp_path / "chart.out")
        export.write(chart, fmt, path)
        with open(path) as f:
            text = f.read()
        reader = export.from_json if fmt == "json" else export.from_tsv
        assert reader(text) == chart

    def test_svg(self, gsmall, tmp_path):
        path = str(tmp_path / "chart.svg")
        export.write(gsmall.chart(), "svg", path)
        with open(path) as f:
            head = f.read(512)
        assert "<svg" in head or "<?xml" in head

    def test_invalid_format(self, chart, tmp_path):
        with pytest.raises(ParamError):
            export.write(chart, "png", str(tmp_path / "chart.png"))
