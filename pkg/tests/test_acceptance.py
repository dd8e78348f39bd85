"""The eight acceptance criteria, run exactly and reported one line each.

Every criterion is an exact-identity or property check; there are no
tolerances anywhere.  The same checks back the `braidcable selftest`
command.
"""

import pytest

from braidcable import selftest


@pytest.mark.parametrize(
    "label,criterion",
    selftest.CRITERIA,
    ids=[label.split()[0] for label, _ in selftest.CRITERIA],
)
def test_acceptance_criterion(label, criterion, capsys):
    ok = criterion()
    with capsys.disabled():
        print("%s  criterion %s" % ("PASS" if ok else "FAIL", label))
    assert ok, "criterion %s failed" % label
