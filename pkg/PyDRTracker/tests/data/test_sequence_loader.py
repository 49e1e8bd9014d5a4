import logging

import numpy as np
import pytest

from PyDRTracker.core.bbox import BBox
from PyDRTracker.data.cn_table_loader import load_cn_table
from PyDRTracker.data.result_writer import write_boxes, write_summary_json
from PyDRTracker.data.sequence_loader import list_sequences, load_sequence, parse_groundtruth_line
from PyDRTracker.data.synthetic import static_sequence, zooming_sequence
from PyDRTracker.exceptions import CnTableError, SequenceFormatError
from PyDRTracker.imaging.image_io import save_image


def _write_sequence(root, frames=3, lines=None):
    (root / "img").mkdir(parents=True)
    frame = static_sequence(num_frames=1).frame(0)
    for index in range(1, frames + 1):
        save_image(frame, root / "img" / f"{index:04d}.jpg")
    lines = lines if lines is not None else ["10,20,30,40"] * frames
    (root / "groundtruth_rect.txt").write_text("\n".join(lines) + "\n", encoding="utf-8")
    return root


def test_parse_groundtruth_separators():
    """Test that commas, tabs and spaces parse identically."""
    expected = BBox(10, 20, 30, 40)
    assert parse_groundtruth_line("10,20,30,40", 1) == expected
    assert parse_groundtruth_line("10\t20\t30\t40", 1) == expected
    assert parse_groundtruth_line("10 20 30 40", 1) == expected


def test_parse_groundtruth_missing_annotation():
    """Test that NaN and zero-size lines are missing annotations."""
    assert parse_groundtruth_line("NaN,NaN,NaN,NaN", 3) is None
    assert parse_groundtruth_line("0,0,0,0", 3) is None


def test_parse_groundtruth_reports_line_number():
    """Test that malformed lines name the file and line."""
    with pytest.raises(SequenceFormatError, match="gt.txt:7"):
        parse_groundtruth_line("1,2,3", 7, "gt.txt")
    with pytest.raises(SequenceFormatError, match="cannot parse"):
        parse_groundtruth_line("a,b,c,d", 2)


def test_load_sequence(tmp_path):
    """Test a three-frame sequence with valid groundtruth."""
    sequence = load_sequence(_write_sequence(tmp_path / "seq"))
    assert sequence.name == "seq"
    assert len(sequence) == 3
    assert sequence.groundtruth[0] == BBox(10, 20, 30, 40)
    assert sequence.load_frame(2).size == (160, 120)


def test_load_sequence_pads_short_groundtruth(tmp_path, caplog):
    """Test that missing trailing lines become missing annotations with a warning."""
    root = _write_sequence(tmp_path / "seq", frames=4, lines=["10,20,30,40", "10,20,30,40"])
    with caplog.at_level(logging.WARNING, logger="PyDRTracker"):
        sequence = load_sequence(root)
    assert sequence.groundtruth[2:] == [None, None]
    assert "padding" in caplog.text


def test_load_sequence_requires_first_box(tmp_path):
    """Test that a missing first annotation is rejected."""
    root = _write_sequence(tmp_path / "seq", lines=["nan,nan,nan,nan", "1,2,3,4", "1,2,3,4"])
    with pytest.raises(SequenceFormatError, match="first frame"):
        load_sequence(root)


def test_load_sequence_missing_groundtruth(tmp_path):
    """Test that a missing groundtruth file is reported."""
    root = _write_sequence(tmp_path / "seq")
    (root / "groundtruth_rect.txt").unlink()
    with pytest.raises(SequenceFormatError, match="Groundtruth file not found"):
        load_sequence(root)


def test_load_sequence_no_frames(tmp_path):
    """Test that an empty image folder is reported."""
    root = tmp_path / "seq"
    (root / "img").mkdir(parents=True)
    (root / "groundtruth_rect.txt").write_text("1,2,3,4\n", encoding="utf-8")
    with pytest.raises(SequenceFormatError, match="No frames"):
        load_sequence(root)


def test_list_sequences(tmp_path, dataset_dir):
    """Test that dataset listing is sorted and rejects missing folders."""
    assert [path.name for path in list_sequences(dataset_dir)] == ["static", "translate"]
    with pytest.raises(SequenceFormatError, match="not found"):
        list_sequences(tmp_path / "nowhere")


def test_synthetic_write_round_trip(tmp_path):
    """Test that a written synthetic sequence loads back with its attributes."""
    synthetic = zooming_sequence(num_frames=3)
    sequence = load_sequence(synthetic.write(tmp_path / "zoom"))
    assert len(sequence) == 3
    assert sequence.attributes == frozenset({"SV"})
    assert np.array_equal(sequence.load_frame(1).pixels, synthetic.frame(1).pixels)
    assert sequence.groundtruth[2].to_line() == synthetic.groundtruth[2].to_line()


def test_load_cn_table_formats(tmp_path, cn_table, cn_table_file):
    """Test plain, indexed and RGB-prefixed table layouts."""
    assert load_cn_table(cn_table_file).width == 10
    indexed = tmp_path / "indexed.txt"
    np.savetxt(indexed, np.column_stack([np.arange(32768), cn_table.probabilities, np.zeros(32768)]), fmt="%.6f")
    assert load_cn_table(indexed).width == 11
    rgb = tmp_path / "rgb.txt"
    np.savetxt(rgb, np.column_stack([np.zeros((32768, 3)), cn_table.probabilities[:, :10], np.zeros(32768)]), fmt="%.6f")
    assert load_cn_table(rgb).width == 11


def test_load_cn_table_rejects_bad_files(tmp_path):
    """Test row-count, width and missing-file errors."""
    short = tmp_path / "short.txt"
    np.savetxt(short, np.ones((10, 10)))
    with pytest.raises(CnTableError, match="32768 rows"):
        load_cn_table(short)
    wide = tmp_path / "wide.txt"
    np.savetxt(wide, np.ones((32768, 13)), fmt="%d")
    with pytest.raises(CnTableError, match="columns"):
        load_cn_table(wide)
    with pytest.raises(CnTableError, match="not found"):
        load_cn_table(tmp_path / "missing.txt")


def test_result_writers(tmp_path):
    """Test box lines and NaN-safe, sorted JSON."""
    write_boxes(tmp_path / "boxes.txt", [BBox(1, 2, 3, 4), BBox(5, 6, 7, 8)])
    assert (tmp_path / "boxes.txt").read_text(encoding="utf-8") == "1.000,2.000,3.000,4.000\n5.000,6.000,7.000,8.000\n"
    write_summary_json(tmp_path / "summary.json", {"b": float("nan"), "a": np.float64(0.5)})
    assert (tmp_path / "summary.json").read_text(encoding="utf-8") == '{\n  "a": 0.5,\n  "b": null\n}\n'
