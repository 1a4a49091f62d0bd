import io

from igelkit.core.encoding import SparseVector
from igelkit.utils.features import (
    format_feature_line,
    format_header,
    parse_feature_line,
    write_feature_blocks,
)


def vec(*entries):
    return SparseVector(8, 3, tuple(entries))


def test_header():
    assert format_header(3, (1, 2), "igel") == "# dcap=3 alpha=1,2 method=igel"


def test_feature_line_round_trip():
    line = format_feature_line(4, vec((3, 1), (5, 3)))
    assert line == "4 3:1 5:3"
    assert parse_feature_line(line) == (4, {3: 1, 5: 3})
    assert format_feature_line(7, vec()) == "7"


def test_single_block_has_no_marker():
    out = io.StringIO()
    write_feature_blocks(out, "# h", [[(0, vec((1, 1)))]])
    assert out.getvalue() == "# h\n0 1:1\n"


def test_several_blocks():
    out = io.StringIO()
    write_feature_blocks(out, "# h", [[(0, vec((1, 1)))], [(0, vec((2, 2)))]], ["dcap=2", ""])
    assert out.getvalue() == "# h\n# graph 0 dcap=2\n0 1:1\n\n# graph 1\n0 2:2\n"
