# -*- coding=utf-8 -*-

# ------------------------------------------------------------------
# File Name:        Settings.py
# Author:           pyFirstLook contributors
# Version:          1.0.0
# Created:          2026/10/18
# Description:      Base class of the validated configuration models.
# Function List:    format_errors: Render pydantic errors as one line each.
#                   FirstLookModel: Frozen, strict pydantic base model with build().
# History:
#       <author>                  <version>   <time>      <desc>
#       pyFirstLook contributors  1.0.0       2026/10/18  Created file
# ------------------------------------------------------------------

import pydantic
from pydantic import BaseModel, ConfigDict

from .Errors import ValidationError


def error_key(loc):
    '''Dotted key of a pydantic error location, e.g. "route.landmarks.0".'''

    return '.'.join(str(part) for part in loc)


def format_errors(exc):
    '''Render a pydantic ValidationError as "key: message" lines.'''

    return '; '.join('%s: %s' % (error_key(err['loc']) or '<root>', err['msg'])
                     for err in exc.errors())


class FirstLookModel(BaseModel):
    '''Frozen model that rejects unknown keys and non-finite floats.

    Plain construction raises pydantic's error, so a parent model keeps the
    full location of a nested failure. `build` is the entry point for
    callers that expect pyFirstLook's ValidationError.
    '''

    model_config = ConfigDict(frozen=True, extra='forbid', allow_inf_nan=False)

    @classmethod
    def build(cls,
              **data):
        '''Validate keyword data into a model.

        Raises:
            ValidationError: Naming every failing key, e.g.
                "CameraModel: gamma_h: Input should be less than or equal to 1".
        '''

        try:
            return cls.model_validate(data)
        except pydantic.ValidationError as exc:
            raise ValidationError('%s: %s' % (cls.__name__, format_errors(exc))) from exc
