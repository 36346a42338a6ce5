# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

import logging
import time

fmt = "[{asctime},{msecs:04.0f}] [{name:16}] [{levelname:9}] {message}"
datefmt = "%Y-%m-%d %H:%M:%S"

black, red, green, yellow, blue, magenta, cyan, white = range(8)
resetseq = "\x1b[0m"
fillseq = "\x1b[K"
colorseq = "\x1b[{:d};{:d}m"
colors = {
    "DEBUG": colorseq.format(30 + white, 100 + black),
    "INFO": colorseq.format(30 + white, 40 + blue),
    "RESULT": colorseq.format(30 + white, 40 + green),
    "WARNING": colorseq.format(30 + black, 40 + yellow),
    "ERROR": colorseq.format(30 + white, 40 + red),
    "CRITICAL": colorseq.format(30 + white, 40 + red),
}

result_levelno = 25  # between INFO and WARNING
logging.addLevelName(result_levelno, "RESULT")


class Formatter(logging.Formatter):
    """
    one record per block, continuation lines of tracebacks and tables are
    prefixed so that they stay attached to their record
    """

    def __init__(self):
        super(Formatter, self).__init__(fmt=fmt, datefmt=datefmt, style="{")
        self.converter = time.localtime

    def format(self, record):
        formatted = super(Formatter, self).format(record)

        lines = [line for line in formatted.splitlines() if line.strip("\r\n\t ")]

        if len(lines) <= 1:
            return formatted

        for i in range(1, len(lines) - 1):
            lines[i] = f"│ {lines[i]}"
        lines[-1] = f"└─{lines[-1]}"

        return "\n".join(lines)


class ColorFormatter(Formatter):
    def format(self, record):
        formatted = super(ColorFormatter, self).format(record)

        color = colors.get(record.levelname)
        if color is None:
            return formatted

        return "\n".join(f"{color}{line}{fillseq}{resetseq}" for line in formatted.split("\n"))
