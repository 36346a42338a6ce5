# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import logging
import warnings
from multiprocessing import current_process

from .context import Context
from .formatter import ColorFormatter
from .filter import PyWarningsFilter
from .worker import MessageSchema

loggernames = [
    "knotcohomology",
    "knotcohomology.linalg",
    "knotcohomology.graph",
    "knotcohomology.rep",
    "knotcohomology.cells",
    "knotcohomology.spectral",
    "knotcohomology.io",
    "knotcohomology.cli",
    "py.warnings",
]

schema = MessageSchema()


class QueueHandler(logging.Handler):
    """
    formats records and puts them on the queue of the logging process,
    records from pool workers carry the name of the worker
    """

    def __init__(self, queue, worker=None):
        super(QueueHandler, self).__init__()
        self.queue = queue
        self.worker = worker

    def emit(self, record):
        try:
            msg = self.format(record)
            obj = schema.dump({"type": "log", "msg": msg, "levelno": record.levelno, "worker": self.worker})
            self.queue.put(obj)
        except Exception:
            self.handleError(record)


def worker_name(process=None):
    """
    "worker 3" for the third process started by a pool
    """
    if process is None:
        process = current_process()
    _, _, index = process.name.rpartition("-")
    if not index.isdigit():
        return process.name
    return f"worker {index}"


def showwarning(message, category, filename, lineno, file=None, line=None):
    s = warnings.formatwarning(message, category, filename, lineno, line)
    logger = logging.getLogger("py.warnings")
    logger.warning(f"{s}")


def setupcontext(levelno=logging.INFO):
    queue = Context.queue()
    setup(queue, levelno=levelno)


def setupworker(loggingargs):
    """
    pool initializer, the records of the worker go to the queue of the
    parent process
    """
    setup(**loggingargs, worker=worker_name())


def setup(queue, levelno=logging.INFO, worker=None):
    """
    route the records of all package loggers through the queue
    """
    queuehandler = QueueHandler(queue, worker=worker)
    queuehandler.setFormatter(ColorFormatter())
    queuehandler.setLevel(levelno)

    for loggername in loggernames:
        logger = logging.getLogger(loggername)

        for hdlr in list(logger.handlers):
            logger.removeHandler(hdlr)
        logger.propagate = False
        logger.filters = []

        logger.addHandler(queuehandler)
        logger.setLevel(levelno)

    warnings.showwarning = showwarning

    logging.getLogger("py.warnings").addFilter(PyWarningsFilter())


def teardown():
    Context.teardown()
