# -*- coding: utf-8 -*-
# emacs: -*- mode: python; py-indent-offset: 4; indent-tabs-mode: nil -*-
# vi: set ft=python sts=4 ts=4 sw=4 et:

from .lock import AdaptiveLock
from .document import DocumentFile, dumps_json

__all__ = [AdaptiveLock, DocumentFile, dumps_json]
