# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Errors.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      Exceptions raised by pyFirstLook and the shared
#                   range check used when validating inputs.
# Function List:    in_range: Check if the value is in the range.
#                   FirstLookError: Base class of all library errors.
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import math


class FirstLookError(Exception):
    '''Base class of all errors raised by pyFirstLook.'''


class EmptyCloud(FirstLookError):
    '''A point cloud with zero points was given where points are required.'''


class ParseError(FirstLookError):
    '''A file could not be parsed.

    Args:
        message: The reason.
        line: The 1-based line number of the offending input, if known.
        key: The dotted key of the offending entry, if known.
    '''

    def __init__(self,
                 message,
                 line=None,
                 key=None):
        self.line = line
        self.key = key
        where = ''
        if line is not None:
            where += 'line %d: ' % line
        if key:
            where += '%s: ' % key
        super().__init__(where + message)


class IoError(FirstLookError, OSError):
    '''A file could not be read or written.'''


class InvalidTarget(FirstLookError, ValueError):
    '''Down-sampling target below one point.'''


class InvalidRange(FirstLookError, ValueError):
    '''Negative or non-finite range.'''


class DegenerateFrame(FirstLookError, ValueError):
    '''A frame failed the orthonormality tolerance.'''


class DegenerateViewDirection(FirstLookError):
    '''The viewing direction is (nearly) parallel to the up vector.'''


class CoincidentPoints(DegenerateViewDirection):
    '''The nearest surface point coincides with the viewer position.'''


class StepTooLarge(FirstLookError):
    '''A commanded displacement exceeds the configured step limit.'''


class InvalidParams(FirstLookError, ValueError):
    '''Surface generator parameters are invalid for the requested kind.'''


class EmptyRoi(FirstLookError, ValueError):
    '''The region of interest contains no ground-truth surface.'''


class EmptyLog(FirstLookError, ValueError):
    '''A run log without records was given.'''


class ValidationError(FirstLookError, ValueError):
    '''A configuration value violates one of its invariants.'''


class RuntimeAbort(FirstLookError):
    '''A mission was aborted; the log up to the abort has been written.

    Args:
        message: The reason.
        log_path: Path of the flushed run log, if any.
    '''

    def __init__(self,
                 message,
                 log_path=None):
        self.log_path = log_path
        super().__init__(message)


def in_range(val,
             val_min=-math.inf,
             val_max=math.inf,
             name='value',
             error=ValidationError,
             min_open=False,
             max_open=False):
    '''Check if the value is in the range.

    Args:
        val: The value to be checked.
        val_min: The minimum value.
        val_max: The maximum value.
        name: The name reported in the error message.
        error: The exception class raised on failure.
        min_open: Exclude the minimum itself.
        max_open: Exclude the maximum itself.

    Returns:
        val: The checked value, as float.

    Raises:
        error: If the value is non-finite or out of range.
    '''

    val = float(val)
    if not math.isfinite(val):
        raise error('%s must be finite, got %r' % (name, val))
    low_ok = val > val_min if min_open else val >= val_min
    high_ok = val < val_max if max_open else val <= val_max
    if not (low_ok and high_ok):
        raise error('%s = %r is out of range %s%s, %s%s' % (name,
                                                           val,
                                                           '(' if min_open else '[',
                                                           val_min,
                                                           val_max,
                                                           ')' if max_open else ']'))
    return val
