"""
Per-step matrix statistics and their TSV log.
"""
import collections
import logging

from .exceptions import CheckpointError
from .types import Phase
from ..settings import DefaultConfig as config

LOGGER = logging.getLogger(__name__)

COLUMNS = ('phase', 's', 't', 'rank', 'rows', 'cols', 'ms', 'new_gens')

HEADER = "# steenres-stats v{}".format(config.STATS_VERSION)


class StatsRecord(collections.namedtuple('StatsRecord', COLUMNS)):
    """
    Dimensions of one eliminated matrix.

    `phase` is Phase.HOM for the homology computation of a step and Phase.LIFT
    for one per-signature lifting problem; `new_gens` is None for lifts.
    """

    __slots__ = ()

    def sort_key(self):
        return self.t, self.s, int(self.phase), self.rank

    def to_row(self):
        return "\t".join([
            str(self.phase), str(self.s), str(self.t), str(self.rank), str(self.rows), str(self.cols),
            "{:.3f}".format(self.ms or 0.0), "" if self.new_gens is None else str(self.new_gens),
        ])

    @classmethod
    def from_row(cls, line):
        fields = line.rstrip("\n").split("\t")
        if len(fields) != len(COLUMNS):
            raise CheckpointError("stats row has {} fields: {!r}".format(len(fields), line))
        phase = Phase[fields[0].upper()]
        new_gens = int(fields[7]) if fields[7] else None
        return cls(phase, int(fields[1]), int(fields[2]), int(fields[3]), int(fields[4]),
                   int(fields[5]), float(fields[6]), new_gens)


class StatsLog:
    """
    Collects records of a run and writes them sorted by (t, s, phase, rank).
    """

    def __init__(self):
        self._records = []

    def __len__(self):
        return len(self._records)

    def __iter__(self):
        return iter(self.sorted())

    def add(self, record):
        self._records.append(record)

    def sorted(self):
        return sorted(self._records, key=StatsRecord.sort_key)

    def at(self, s, t, phase=None):
        return [r for r in self.sorted() if r.s == s and r.t == t and (phase is None or r.phase == phase)]

    def dump(self):
        lines = [HEADER, "\t".join(COLUMNS)]
        lines.extend(r.to_row() for r in self.sorted())
        return "\n".join(lines) + "\n"

    def write(self, path):
        with open(path, 'w') as f:
            f.write(self.dump())
        LOGGER.info("wrote %d stats records to %s", len(self._records), path)

    @classmethod
    def read(cls, path):
        log = cls()
        with open(path) as f:
            lines = f.read().splitlines()
        if len(lines) < 2 or lines[0] != HEADER or lines[1] != "\t".join(COLUMNS):
            raise CheckpointError("{} is not a steenres stats file".format(path))
        for line in lines[2:]:
            if line:
                log.add(StatsRecord.from_row(line))
        return log
