"""Figure rendering for the census report paths."""

from __future__ import annotations

from synckit import Histogram, gap_report
from synckit.plots import save_conjecture_figure, save_histogram_figure


def test_histogram_figure_written(tmp_path):
    hist = Histogram(counts={3: 120, 4: 50, 6: 9, 9: 1}, nonsync=30, total=210)
    path = tmp_path / "hist.png"
    save_histogram_figure(hist, path, n=4, k=2, gap=gap_report(hist, 4))
    assert path.exists() and path.stat().st_size > 1000


def test_conjecture_figure_written(tmp_path):
    path = tmp_path / "conj.png"
    save_conjecture_figure({1: 4, 2: 5, 3: 3}, 3, path, n=3, k=2)
    assert path.exists() and path.stat().st_size > 1000
