# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

"""
documents written to the output directory, one file per document name
"""

import json
import logging
from pathlib import Path

from .lock import AdaptiveLock
from ..utils import formatslug

logger = logging.getLogger("knotcohomology.io")

suffixes = {"json": ".json", "markdown": ".md"}


def dumps_json(obj):
    """
    stable text for a document, identical inputs give identical bytes
    """
    return json.dumps(obj, indent=4, sort_keys=True, ensure_ascii=False) + "\n"


class DocumentFile(AdaptiveLock):
    def __init__(self, outdir, name, fmt="json"):
        super(DocumentFile, self).__init__()

        if fmt not in suffixes:
            raise ValueError(f'Unknown document format "{fmt}"')

        self.outdir = Path(outdir)
        self.filename = self.outdir / f"{formatslug(name)}{suffixes[fmt]}"
        self.fmt = fmt

    def __enter__(self):
        self.outdir.mkdir(parents=True, exist_ok=True)
        self.lock(self.lock_file(self.filename))
        return self

    def __exit__(self, *args):
        self.unlock()

    def write(self, content):
        if not isinstance(content, str):
            content = dumps_json(content)

        if self.filename.is_file() and self.filename.read_text(encoding="utf-8") == content:
            logger.debug(f'Document "{self.filename}" is unchanged')
            return False  # update not needed

        temporary = self.filename.parent / f".{self.filename.name}.tmp"
        temporary.write_text(content, encoding="utf-8")
        temporary.replace(self.filename)

        logger.info(f'Wrote "{self.filename}"')
        return True
