# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import logging
from logging import Filter


def setLevel(record, levelno=logging.DEBUG):
    record.levelno = levelno
    record.levelname = logging.getLevelName(levelno)


class PyWarningsFilter(Filter):
    """
    demote deprecation noise of the schema and algebra libraries
    """

    messages_to_filter = [
        "The 'missing' argument to fields is deprecated. Use 'load_default' instead.",
        "The 'default' argument to fields is deprecated. Use 'dump_default' instead.",
        "Passing field metadata as keyword arguments is deprecated.",
        "non-integer arguments to randrange() have been deprecated",
    ]

    def filter(self, record):
        message = record.getMessage()

        for message_to_filter in self.messages_to_filter:
            if message_to_filter in message:
                setLevel(record, levelno=logging.DEBUG)

        return True
