# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
log records of all processes are formatted where they are emitted and
written by a single logging process, to stderr and to log.txt and err.txt
in the output directory
"""

from .base import setupcontext, setupworker, setup, teardown
from .context import Context
from .formatter import result_levelno

__all__ = [setupcontext, setupworker, setup, teardown, Context, result_levelno]
