# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
"""
The testing package for partlab.
"""

SMALL_KS = (2, 3)
"""The number of parts the large-``n`` sweeps are restricted to."""
