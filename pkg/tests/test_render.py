import numpy as np
import pytest

from meshcompiler import (
    dft_matrix,
    refine,
    render_ascii,
    render_svg,
    triangulate,
)

QUATTER_DIAGRAM = (
    "0: -- /3 -- /6\n"
    "1: /1 \\3 /4 \\6\n"
    "2: \\1 /2 \\4 /5\n"
    "3: -- \\2 -- \\5\n"
)


def _dec(n):
    return refine(triangulate(dft_matrix(n)))


def test_quatter_ascii_diagram():
    assert render_ascii(_dec(4)) == QUATTER_DIAGRAM


def test_ascii_brackets_come_in_pairs():
    text = render_ascii(_dec(4))
    for k in range(1, 7):
        assert text.count(f"/{k}") == 1
        assert text.count(f"\\{k}") == 1


def test_two_mode_ascii():
    assert render_ascii(_dec(2)) == "0: /1\n1: \\1\n"


def test_seven_mode_ascii_is_rectangular():
    lines = render_ascii(_dec(7)).splitlines()
    assert len(lines) == 7
    assert len({len(line) for line in lines}) == 1
    # 21 gates, two-digit orders pad to width 2
    assert "/-1" in lines[4] and "/21" in lines[0]


def test_single_mode_ascii():
    dec = refine(triangulate(np.array([[np.exp(0.3j)]])))
    assert render_ascii(dec) == "0: \n"


def test_ascii_is_deterministic():
    dec = _dec(5)
    assert render_ascii(dec) == render_ascii(dec)


def test_quatter_svg_inventory():
    svg = render_svg(_dec(4))
    assert svg.startswith("<svg ") and svg.endswith("</svg>\n")
    assert svg.count("<line ") == 4
    assert svg.count("<rect ") == 7  # background plus one box per gate
    assert svg.count('fill="none"') == 6
    assert svg.count('text-anchor="middle"') == 6
    for k in range(1, 7):
        assert f">{k}</text>" in svg


def test_svg_is_deterministic():
    dec = _dec(6)
    assert render_svg(dec) == render_svg(dec)


def test_single_mode_svg():
    dec = refine(triangulate(np.array([[1.0 + 0j]])))
    svg = render_svg(dec)
    assert svg.count("<line ") == 1
    assert svg.count("<rect ") == 1  # just the background


@pytest.mark.parametrize("n", [2, 4, 7])
def test_svg_mode_labels(n):
    svg = render_svg(_dec(n))
    for m in range(n):
        assert f">{m}</text>" in svg
