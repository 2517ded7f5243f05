# -*- coding: utf8 -*-
########################################################################################
# This file is part of partlab.                                                        #
# Full BSD 3-Clause license available in the LICENSE file at the repository root.     #
########################################################################################
"""
Tests for validating parts of :mod:`partlab.utils`.
"""
import io
import re

import pytest

from partlab import configs, utils
from partlab.exceptions import DomainError
from partlab.utils import AnsiColors


def test_heading_mark():
    assert utils.heading_mark("Tables", "=") == "======"
    assert utils.heading_mark("Sub", configs.SECTION_HEADING_CHAR) == "==="


@pytest.mark.parametrize("seconds,expected", [
    (0.5, "0.5 seconds"),
    (1, "1.00 second"),
    (61.25, "1 minute, and 1.25 seconds"),
    (3600 + 120 + 3, "1 hour, 2 minutes, and 3.0 seconds"),
    (7200, "2 hours, 0.0 seconds"),
    (86400 + 5, "1 day, 0:00:05"),
])
def test_time_string(seconds, expected):
    assert utils.time_string(10, 10 + seconds) == expected


def test_require_int():
    assert utils.require_int("n", 5) == 5
    assert utils.require_int("n", -3) == -3
    assert utils.require_int("k", 1, minimum=1) == 1

    with pytest.raises(DomainError) as exc_info:
        utils.require_int("n", 6.0)
    exc_info.match(re.escape("`n` must be an integer, but was `6.0`."))

    with pytest.raises(DomainError) as exc_info:
        utils.require_int("flag", True)
    exc_info.match(re.escape("`flag` must be an integer, but was `True`."))

    with pytest.raises(DomainError) as exc_info:
        utils.require_int("k", 0, minimum=1)
    exc_info.match(re.escape("`k` must be at least 1, but was 0."))


def test_prefix():
    assert utils.prefix("(!) ", "one\n\ntwo") == "(!) one\n(!) \n(!) two"


def test_colorize():
    assert utils.colorize("hi", AnsiColors.BOLD_RED) == "\033[31;1mhi\033[0m"
    assert AnsiColors.DIM_CYAN == "36;2m"


def test_use_color():
    stream = io.StringIO()
    assert utils._use_color("hi", AnsiColors.GREEN, stream) == "\033[32mhi\033[0m"
    configs.alwaysColorize = False
    assert utils._use_color("hi", AnsiColors.GREEN, stream) == "hi"


def test_message_prefixes():
    configs.alwaysColorize = False
    stream = io.StringIO()
    assert utils.progress("done", output_stream=stream) == "[+] done"
    assert utils.info("working", output_stream=stream) == "[~] working"
    assert utils.critical("a\nb", output_stream=stream) == "(!) a\n(!) b"


def test_verbose_log(capsys):
    utils.verbose_log("quiet")
    assert capsys.readouterr().err == ""

    configs.verboseBuild = True
    configs.alwaysColorize = False
    utils.verbose_log("loud")
    utils.verbose_log("blue", AnsiColors.BLUE)
    captured = capsys.readouterr()
    assert captured.out == ""
    assert captured.err == "loud\nblue\n"
