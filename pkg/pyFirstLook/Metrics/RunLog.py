# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        RunLog.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      Per-tick run log with CRC-framed CSV records.
# Function List:    TickRecord: One simulation tick.
#                   RunLog: Header plus ordered tick records.
#                   record_crc: CRC-16 of a record's fields.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import csv
import json
import logging
import math
from dataclasses import dataclass, field
from typing import List, Tuple

import crcmod

from ..Errors import IoError, ParseError

logger = logging.getLogger(__name__)

MAGIC = '# pyfirstlook-runlog v1 '

# Modbus CRC-16
_crc16 = crcmod.mkCrcFun(0x18005,
                         rev=True,
                         initCrc=0xFFFF,
                         xorOut=0x0000)

NAN = float('nan')


def record_crc(values):
    '''CRC-16 of the record's text fields, as 4 hex digits.'''

    return '%04X' % _crc16('|'.join(values).encode('utf-8'))


def _fmt(val):
    # repr round-trips floats exactly
    return repr(float(val))


@dataclass(frozen=True)
class TickRecord(object):
    tick: int
    time: float
    phase: str
    phase_after: str
    active_landmark: int
    step_mode: str
    lateral_sign: int
    odom: Tuple[float, float, float, float]
    reference: Tuple[float, float, float, float]
    nn: Tuple[float, float, float] = (NAN, NAN, NAN)
    nn_range: float = NAN
    d_insp: float = NAN
    d_hov: float = NAN
    d_vov: float = NAN
    coverage: float = 0.0
    diagnostic: str = ''
    predicted: Tuple[Tuple[float, ...], ...] = ()

    COLUMNS = ('tick', 'time', 'phase', 'phase_after', 'active_landmark', 'step_mode', 'lateral_sign',
               'odom_x', 'odom_y', 'odom_z', 'odom_yaw',
               'ref_x', 'ref_y', 'ref_z', 'ref_yaw',
               'nn_x', 'nn_y', 'nn_z', 'nn_range',
               'd_insp', 'd_hov', 'd_vov', 'coverage', 'diagnostic', 'predicted', 'crc')

    def has_observation(self):
        return math.isfinite(self.nn_range)

    def to_row(self):
        values = [str(self.tick), _fmt(self.time), self.phase, self.phase_after,
                  str(self.active_landmark), self.step_mode, str(self.lateral_sign)]
        values += [_fmt(v) for v in self.odom]
        values += [_fmt(v) for v in self.reference]
        values += [_fmt(v) for v in self.nn]
        values += [_fmt(self.nn_range), _fmt(self.d_insp), _fmt(self.d_hov), _fmt(self.d_vov),
                   _fmt(self.coverage), self.diagnostic.replace('\n', ' ')]
        values.append(';'.join(':'.join(_fmt(v) for v in step) for step in self.predicted))
        values.append(record_crc(values))
        return values

    @classmethod
    def from_row(cls,
                 row,
                 lineno):
        if len(row) != len(cls.COLUMNS):
            raise ParseError('record has %d fields, expected %d' % (len(row), len(cls.COLUMNS)), line=lineno)
        if record_crc(row[:-1]) != row[-1]:
            raise ParseError('record checksum mismatch (truncated or corrupted record)', line=lineno)
        try:
            floats = lambda cells: tuple(float(c) for c in cells)
            predicted = tuple(floats(step.split(':')) for step in row[24].split(';') if step)
            return cls(tick=int(row[0]),
                       time=float(row[1]),
                       phase=row[2],
                       phase_after=row[3],
                       active_landmark=int(row[4]),
                       step_mode=row[5],
                       lateral_sign=int(row[6]),
                       odom=floats(row[7:11]),
                       reference=floats(row[11:15]),
                       nn=floats(row[15:18]),
                       nn_range=float(row[18]),
                       d_insp=float(row[19]),
                       d_hov=float(row[20]),
                       d_vov=float(row[21]),
                       coverage=float(row[22]),
                       diagnostic=row[23],
                       predicted=predicted)
        except ValueError as exc:
            raise ParseError('malformed record: %s' % exc, line=lineno) from None


@dataclass
class RunLog(object):
    '''Run header (report configuration) and one record per tick.'''

    header: dict = field(default_factory=dict)
    records: List[TickRecord] = field(default_factory=list)

    def __len__(self):
        return len(self.records)

    def append(self,
               record):
        if self.records and record.time <= self.records[-1].time:
            raise ValueError('timestamps must increase: %r after %r' % (record.time, self.records[-1].time))
        self.records.append(record)

    def write(self,
              path):
        '''Write the log as CSV with a JSON header comment.'''

        try:
            with open(path, 'w', newline='', encoding='utf-8') as log_file:
                log_file.write(MAGIC + json.dumps(self.header, sort_keys=True) + '\n')
                writer = csv.writer(log_file, lineterminator='\n')
                writer.writerow(TickRecord.COLUMNS)
                for record in self.records:
                    writer.writerow(record.to_row())
        except OSError as exc:
            raise IoError('cannot write %s: %s' % (path, exc)) from exc
        logger.info('Wrote %d log records to %s', len(self.records), path)

    @classmethod
    def read(cls,
             path):
        '''Read a log written by write.

        Raises:
            ParseError: Naming the line of the first bad record.
            IoError: If the file cannot be read.
        '''

        try:
            with open(path, 'r', newline='', encoding='utf-8') as log_file:
                text = log_file.read()
        except OSError as exc:
            raise IoError('cannot read %s: %s' % (path, exc)) from exc

        lines = text.split('\n')
        if not lines[0].startswith(MAGIC):
            raise ParseError('missing run log header', line=1)
        try:
            header = json.loads(lines[0][len(MAGIC):])
        except ValueError as exc:
            raise ParseError('invalid header JSON: %s' % exc, line=1) from None
        if not isinstance(header, dict) or not isinstance(header.get('config'), dict):
            raise ParseError('run log header carries no config mapping', line=1)
        if len(lines) < 2 or lines[1].split(',') != list(TickRecord.COLUMNS):
            raise ParseError('unexpected column header', line=2)

        log = cls(header=header)
        for offset, row in enumerate(csv.reader(lines[2:])):
            lineno = offset + 3
            if not row:
                continue
            record = TickRecord.from_row(row, lineno)
            if log.records and record.time <= log.records[-1].time:
                raise ParseError('timestamps not increasing', line=lineno)
            log.records.append(record)
        return log


