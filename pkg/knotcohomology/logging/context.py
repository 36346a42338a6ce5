# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import logging
from multiprocessing import get_context
from threading import RLock

from .worker import run as runWorker, MessageSchema

schema = MessageSchema()


class Context(object):
    """
    the logging worker process and the queue that feeds it, created on
    first use
    """

    _instance = None
    _instance_rlock = RLock()

    @classmethod
    def instance(cls):
        if cls._instance is None:
            with cls._instance_rlock:
                if cls._instance is None:
                    cls._instance = cls()

        return cls._instance

    @classmethod
    def is_running(cls):
        return cls._instance is not None

    @classmethod
    def teardown(cls):
        with cls._instance_rlock:
            if cls._instance is None:
                return

            cls.queue().join()

            obj = schema.dump({"type": "teardown"})
            cls.queue().put(obj)

            cls._instance.worker.join(1.0)
            cls._instance = None

    @classmethod
    def queue(cls):
        return cls.instance().queue

    @classmethod
    def loggingargs(cls):
        return dict(
            queue=cls.queue(),
            levelno=logging.getLogger("knotcohomology").level
        )

    @classmethod
    def put(cls, obj):
        cls.queue().put(schema.dump(obj))

    @classmethod
    def enableVerbose(cls):
        cls.put({"type": "enable_verbose"})

    @classmethod
    def enablePrint(cls):
        cls.put({"type": "enable_print"})

    @classmethod
    def disablePrint(cls):
        cls.put({"type": "disable_print"})

    @classmethod
    def setOutdir(cls, outdir):
        cls.put({"type": "set_outdir", "outdir": str(outdir)})

    def __init__(self):
        ctx = get_context("forkserver")

        self.queue = ctx.JoinableQueue()

        self.worker = ctx.Process(target=runWorker, args=(self.queue,), daemon=True)
        self.worker.start()
