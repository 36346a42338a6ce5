# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from .format import formatlist, formattitle, formatslug
from .hash import hexdigest
from .ops import ravel, splitlist

from inflect import engine


inflect_engine = engine()
del engine

__all__ = [
    inflect_engine,
    formatlist, formattitle, formatslug,
    hexdigest,
    ravel, splitlist,
]
