import numpy as np
import pytest
from numpy.testing import assert_array_equal

from module.experiment_config import config_from_mapping, resolve_representation
from module.fehler import ConfigurationError
from module.fourier import dft_matrix
from module.matrix_io import (
    format_matrix,
    store_uploaded_matrix,
    read_complex_matrix,
    read_complex_vector,
    read_matrix_stack,
    write_complex_matrix,
    write_complex_vector,
    write_matrix_stack,
)


def test_format_matrix_layout():
    text = format_matrix(np.array([[1 + 2j, 0.5], [0, complex(0, -1)]]))
    assert text == "2 2\n1.0 2.0 0.5 0.0\n0.0 0.0 0.0 -1.0\n"


def test_write_and_read_stack(tmp_path):
    rng = np.random.default_rng(0)
    matrices = [rng.standard_normal((3, 3)) + 1j * rng.standard_normal((3, 3)) for _ in range(4)]
    path = write_matrix_stack(tmp_path / "sub" / "stack.txt", matrices)
    loaded = read_matrix_stack(path)
    assert len(loaded) == 4
    for original, back in zip(matrices, loaded):
        assert_array_equal(original, back)


def test_comments_and_blank_lines_are_skipped(tmp_path):
    path = tmp_path / "v.txt"
    path.write_text("# Erzeugender Vektor\n\n2 1\n1 0\n\n# Ende der ersten Zeile\n0 1\n", encoding="utf-8")
    assert_array_equal(read_complex_vector(path), [1, 1j])


def test_single_matrix_and_vector_helpers(tmp_path):
    write_complex_matrix(tmp_path / "m.txt", np.eye(2))
    assert_array_equal(read_complex_matrix(tmp_path / "m.txt"), np.eye(2))
    write_complex_vector(tmp_path / "v.txt", [1, 2, 3])
    assert_array_equal(read_complex_vector(tmp_path / "v.txt"), [1, 2, 3])
    with pytest.raises(ConfigurationError, match="kein Vektor"):
        read_complex_vector(tmp_path / "m.txt")
    write_matrix_stack(tmp_path / "two.txt", [np.eye(2), np.eye(2)])
    with pytest.raises(ConfigurationError, match="genau eine"):
        read_complex_matrix(tmp_path / "two.txt")


@pytest.mark.parametrize(
    "text, message",
    [
        ("2\n1 0 0 0\n0 0 1 0\n", "Kopfzeile"),
        ("2 2\n1 0 0 0\n", "vorzeitig"),
        ("2 2\n1 0 0\n0 0 1 0\n", "4 Werte"),
        ("1 1\nx 0\n", "keine Zahl"),
        ("0 2\n", "positiv"),
        ("# leer\n", "keine Matrix"),
    ],
)
def test_malformed_files_name_the_problem(tmp_path, text, message):
    path = tmp_path / "kaputt.txt"
    path.write_text(text, encoding="utf-8")
    with pytest.raises(ConfigurationError, match=message):
        read_matrix_stack(path)


def test_missing_file(tmp_path):
    with pytest.raises(ConfigurationError, match="nicht lesbar"):
        read_matrix_stack(tmp_path / "fehlt.txt")


def test_uploaded_matrix_feeds_file_conjugation(tmp_path):
    data = format_matrix(dft_matrix(6)).encode("utf-8")
    path = store_uploaded_matrix(data, tmp_path, "../V.txt")
    assert path == tmp_path / "V.txt"
    config = config_from_mapping(
        {
            "group": {"kind": "cyclic", "param": 6},
            "representation": {"conjugate": "file", "conjugate_file": str(path)},
        }
    )
    resolved = resolve_representation(config)
    assert resolved.rep.realization == "left_regular+file"
    assert resolved.transform is not None


def test_uploaded_matrix_must_be_single_utf8_matrix(tmp_path):
    stack = (format_matrix(np.eye(2)) * 2).encode("utf-8")
    with pytest.raises(ConfigurationError, match="genau eine"):
        store_uploaded_matrix(stack, tmp_path)
    with pytest.raises(ConfigurationError, match="UTF-8"):
        store_uploaded_matrix(b"\xff\xfe", tmp_path)
