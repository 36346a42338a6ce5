# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from os import getenv
from pathlib import Path

KNOTCOHOMOLOGY_DATA_DIR = Path(__file__).parent / "data"

DEFAULT_FACTS_FILE = KNOTCOHOMOLOGY_DATA_DIR / "facts.json"


def facts_file(path=None):
    if path is not None:
        return Path(path)

    envpath = getenv("KNOTCOHOMOLOGY_FACTS")
    if envpath is not None and len(envpath) > 0:
        return Path(envpath)

    return DEFAULT_FACTS_FILE


def output_dir(path=None):
    """
    resolve the directory that receives documents and log files,
    returns None when neither the argument nor the environment names one
    """
    if path is None:
        path = getenv("KNOTCOHOMOLOGY_OUTPUT_DIR")

    if path is None or len(str(path)) == 0:
        return

    return Path(path).resolve()
