# Copyright: (c) 2026, Quantum Geometry Maintainers
# Apache License version 2.0 (see MODULE-LICENSE or http://www.apache.org/licenses/LICENSE-2.0.txt)

"""Custom rotating file handler for the algebroid verification logs"""

from __future__ import (absolute_import, division, print_function)
__metaclass__ = type

import os
from datetime import datetime
from logging.handlers import RotatingFileHandler


class CustomRotatingFileHandler(RotatingFileHandler):
    def rotation_filename(self, default_name):
        """
        Stamp the rotation date into a rotated log file name.
        ansible_algebroid.log.1 becomes ansible_algebroid_20260101.log.1
        :param default_name: The default name of the rotated log file.
        """
        base, backup_suffix = os.path.splitext(default_name)
        stem, extension = os.path.splitext(base)
        if not backup_suffix[1:].isdigit():
            stem, extension, backup_suffix = base, backup_suffix, ''
        return "{0}_{1:%Y%m%d}{2}{3}".format(stem, datetime.now(), extension, backup_suffix)
