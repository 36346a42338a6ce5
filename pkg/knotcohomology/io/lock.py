# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import logging

from flufl.lock import Lock as FluflLock
from fasteners import InterProcessLock as FcntlLock

logger = logging.getLogger("knotcohomology.io")


class AdaptiveLock:
    """
    hard link based lock files, falling back to fcntl on file systems
    without hard links and to no locking at all
    """

    timeout = 600

    def __init__(self):
        self.method = "hard_links"

        self.lock_instance = None

    @staticmethod
    def lock_file(path):
        return str(path.parent / f".{path.name}.lock")  # hidden lock file

    def lock(self, lock_file):
        if self.method == "hard_links":
            self.lock_instance = FluflLock(lock_file, lifetime=60)  # seconds after which the lock is broken

            try:
                self.lock_instance.lock(timeout=self.timeout)
                return
            except (TimeoutError, OSError):
                pass

            logger.warning("Unable to use hard link-based file locks. Trying fcntl-based file locks", exc_info=True)

            self.method = "fcntl"

        if self.method == "fcntl":
            self.lock_instance = FcntlLock(lock_file)

            if self.lock_instance.acquire(timeout=self.timeout):
                return

            logger.warning("Unable to use fcntl-based file locks. Disabling file locks", exc_info=True)

            self.method = None

    def unlock(self):
        if self.method == "hard_links":
            self.lock_instance.unlock(unconditionally=True)  # do not raise errors in unlock
        elif self.method == "fcntl":
            self.lock_instance.release()
        self.lock_instance = None
