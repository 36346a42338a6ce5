# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import logging
import multiprocessing as mp
from concurrent.futures import ProcessPoolExecutor

from ..logging import Context

logger = logging.getLogger("knotcohomology.cli")


def initializer(loggingargs):
    from ..logging import setupworker
    setupworker(loggingargs)


def fan_out(function, arguments, jobs=1):
    """
    apply function to each argument in worker processes, results are
    returned in the order of the arguments
    """
    arguments = list(arguments)

    if jobs is None or jobs < 2 or len(arguments) < 2:
        return [function(argument) for argument in arguments]

    max_workers = min(jobs, len(arguments))
    logger.debug(f"Starting {max_workers} worker processes")

    kwargs = dict()
    if Context.is_running():
        kwargs.update(initializer=initializer, initargs=(Context.loggingargs(),))

    mp_context = mp.get_context("forkserver")  # force forkserver
    with ProcessPoolExecutor(max_workers=max_workers, mp_context=mp_context, **kwargs) as pool:
        return list(pool.map(function, arguments))
