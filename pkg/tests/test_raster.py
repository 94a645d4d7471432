import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from hypothesis.extra.numpy import arrays

from scaff import Connectivity, Palette, ValidationError, crop, pad, relabel


def raster(rows):
    return np.array(rows, dtype=np.uint8)


small_rasters = arrays(
    dtype=np.uint8,
    shape=st.tuples(st.integers(1, 12), st.integers(1, 12)),
    elements=st.integers(0, 255),
)


class TestPad:
    def test_single_pixel_frame(self):
        out = pad(raster([[255]]), 1, 0)
        expected = raster([[0, 0, 0], [0, 255, 0], [0, 0, 0]])
        np.testing.assert_array_equal(out, expected)

    def test_dimensions(self):
        img = np.zeros((200, 200), dtype=np.uint8)
        assert pad(img, 1, 0).shape == (202, 202)

    def test_margin_zero_rejected(self):
        with pytest.raises(ValidationError):
            pad(raster([[0]]), 0, 0)

    def test_frame_is_uniform(self):
        out = pad(np.full((3, 4), 9, dtype=np.uint8), 2, 7)
        inner = out[2:5, 2:6]
        frame = out.copy()
        frame[2:5, 2:6] = 7
        assert (inner == 9).all()
        assert (frame == 7).all()


class TestCrop:
    def test_three_by_three(self):
        np.testing.assert_array_equal(crop(np.zeros((3, 3), dtype=np.uint8), 1), raster([[0]]))

    def test_dimensions(self):
        img = np.zeros((202, 202), dtype=np.uint8)
        assert crop(img, 1).shape == (200, 200)

    def test_too_small(self):
        with pytest.raises(ValidationError):
            crop(np.zeros((2, 5), dtype=np.uint8), 1)
        with pytest.raises(ValidationError):
            crop(np.zeros((5, 2), dtype=np.uint8), 1)

    @given(small_rasters, st.integers(1, 3))
    def test_pad_then_crop_is_identity(self, img, margin):
        np.testing.assert_array_equal(crop(pad(img, margin, 77), margin), img)


class TestRelabel:
    def test_color_inversion_pairs(self):
        img = raster([[0, 80, 255]])
        np.testing.assert_array_equal(relabel(img, [(0, 255), (80, 0)]), raster([[255, 0, 255]]))

    def test_empty_mapping_is_identity(self):
        img = raster([[1, 2], [3, 4]])
        np.testing.assert_array_equal(relabel(img, []), img)

    def test_swap_has_no_cascade(self):
        img = raster([[10, 20, 10, 30]])
        out = relabel(img, [(10, 20), (20, 10)])
        np.testing.assert_array_equal(out, raster([[20, 10, 20, 30]]))

    def test_duplicate_from_rejected(self):
        with pytest.raises(ValidationError):
            relabel(raster([[0]]), [(5, 1), (5, 2)])

    def test_boundary_pixels_untouched(self):
        # mapping away the label colors must keep every 255 in place
        img = raster([[80, 255, 128], [255, 80, 255]])
        out = relabel(img, [(80, 0), (128, 255)])
        assert np.count_nonzero(out == 255) >= np.count_nonzero(img == 255)
        assert ((img == 255) <= (out == 255)).all()

    @given(small_rasters)
    @settings(max_examples=50)
    def test_swap_is_involutive(self, img):
        once = relabel(img, [(3, 9), (9, 3)])
        twice = relabel(once, [(3, 9), (9, 3)])
        np.testing.assert_array_equal(twice, img)


class TestConnectivity:
    def test_four_offsets(self):
        assert set(Connectivity.FOUR.offsets) == {(0, -1), (0, 1), (-1, 0), (1, 0)}

    def test_eight_is_superset_of_four(self):
        four = set(Connectivity.FOUR.offsets)
        eight = set(Connectivity.EIGHT.offsets)
        assert len(four) == 4 and len(eight) == 8
        assert four < eight
        assert eight - four == {(-1, -1), (1, 1), (-1, 1), (1, -1)}


class TestPalette:
    def test_defaults(self):
        p = Palette()
        assert (p.background, p.boundary, p.exterior_label, p.interior_label, p.mask) == (
            0, 255, 80, 128, 255,
        )

    def test_mask_may_equal_boundary(self):
        Palette(mask=255, boundary=255)

    @pytest.mark.parametrize(
        "kwargs",
        [
            {"background": 255},                      # collides with boundary
            {"exterior_label": 0},                    # collides with background
            {"mask": 0},                              # mask == background
            {"mask": 80},                             # mask == exterior label
            {"mask": 128},                            # mask == interior label
            {"boundary": 300},                        # out of 8-bit range
            {"background": -1},
        ],
    )
    def test_invalid_palettes(self, kwargs):
        with pytest.raises(ValidationError):
            Palette(**kwargs)
