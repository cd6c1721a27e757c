"""Tests for binary checkpoints."""

import numpy as np
import pytest

from eulervoigt.core.errors import CheckpointError
from eulervoigt.core.spectral import inverse_transform
from eulervoigt.io.checkpoint import (
    FORMAT_VERSION,
    HEADER,
    MAGIC,
    Checkpoint,
    read_checkpoint,
    write_checkpoint,
)


@pytest.fixture
def checkpoint16(grid16, random_field16):
    return Checkpoint.from_spectral(random_field16, grid16, alpha=0.05, t=0.25)


def test_samples_round_trip_bitwise(tmp_path, checkpoint16):
    path = write_checkpoint(tmp_path / "state.evck", checkpoint16)
    loaded = read_checkpoint(path, expected_n=16)
    assert loaded.n == 16
    assert loaded.alpha == 0.05
    assert loaded.t == 0.25
    assert np.array_equal(loaded.samples, checkpoint16.samples)


def test_spectral_state_survives(tmp_path, grid16, random_field16, checkpoint16):
    loaded = read_checkpoint(write_checkpoint(tmp_path / "s.evck", checkpoint16))
    np.testing.assert_allclose(
        loaded.to_spectral(), random_field16, rtol=0, atol=1e-15
    )


def test_file_layout(tmp_path, grid16, taylor_green16):
    checkpoint = Checkpoint.from_spectral(taylor_green16, grid16, alpha=0.0, t=0.0)
    path = write_checkpoint(tmp_path / "tg.evck", checkpoint)
    data = path.read_bytes()
    assert data[:4] == MAGIC
    assert len(data) == HEADER.size + 3 * 16**3 * 8

    magic, version, n, alpha, t = HEADER.unpack_from(data)
    assert (magic, version, n, alpha, t) == (MAGIC, FORMAT_VERSION, 16, 0.0, 0.0)

    payload = np.frombuffer(data[HEADER.size :], dtype="<f8")
    samples = inverse_transform(taylor_green16, grid16)
    # x1 varies fastest: consecutive values walk along the first axis.
    np.testing.assert_array_equal(payload[:16], samples[0, :, 0, 0])
    np.testing.assert_array_equal(payload[16:32], samples[0, :, 1, 0])
    np.testing.assert_array_equal(payload[16**3 : 16**3 + 16], samples[1, :, 0, 0])


def test_creates_parent_directories(tmp_path, checkpoint16):
    path = write_checkpoint(tmp_path / "a" / "b" / "state.evck", checkpoint16)
    assert path.exists()


class TestInvalidCheckpoints:
    def _write(self, tmp_path, checkpoint):
        return write_checkpoint(tmp_path / "state.evck", checkpoint)

    def test_missing_file(self, tmp_path):
        with pytest.raises(CheckpointError, match="Cannot read"):
            read_checkpoint(tmp_path / "missing.evck")

    def test_truncated_header(self, tmp_path):
        path = tmp_path / "short.evck"
        path.write_bytes(MAGIC + b"\x01")
        with pytest.raises(CheckpointError, match="truncated"):
            read_checkpoint(path)

    def test_truncated_payload(self, tmp_path, checkpoint16):
        path = self._write(tmp_path, checkpoint16)
        path.write_bytes(path.read_bytes()[:-8])
        with pytest.raises(CheckpointError, match="payload"):
            read_checkpoint(path)

    def test_bad_magic(self, tmp_path, checkpoint16):
        path = self._write(tmp_path, checkpoint16)
        path.write_bytes(b"XXXX" + path.read_bytes()[4:])
        with pytest.raises(CheckpointError, match="magic"):
            read_checkpoint(path)

    def test_unsupported_version(self, tmp_path, checkpoint16):
        path = self._write(tmp_path, checkpoint16)
        data = bytearray(path.read_bytes())
        HEADER.pack_into(data, 0, MAGIC, FORMAT_VERSION + 1, 16, 0.05, 0.25)
        path.write_bytes(bytes(data))
        with pytest.raises(CheckpointError, match="version"):
            read_checkpoint(path)

    def test_grid_mismatch(self, tmp_path, checkpoint16):
        path = self._write(tmp_path, checkpoint16)
        with pytest.raises(CheckpointError, match="expected n=32"):
            read_checkpoint(path, expected_n=32)
