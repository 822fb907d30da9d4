import io
import math

import pytest

from estfuse import SourceEstimate
from estfuse.io import InputError, detect_format, format_estimates_csv, parse_estimates, read_estimates


def test_plain_csv():
    es = parse_estimates("0,1\n1,2\n")
    assert es == [SourceEstimate(0, 1), SourceEstimate(1, 2)]


def test_csv_header_labels_and_infinity():
    text = "value,uncertainty,label\n1.5,Inf,oracle\n-2e-1, 0.25 ,lab\n\n# note\n3,inf\n"
    es = parse_estimates(text)
    assert es == [SourceEstimate(1.5, math.inf, "oracle"), SourceEstimate(-0.2, 0.25, "lab"), SourceEstimate(3, math.inf)]


def test_csv_header_reordered_columns():
    assert parse_estimates("uncertainty,value\n2,1\n") == [SourceEstimate(1, 2)]
    with pytest.raises(InputError):
        parse_estimates("value,label\n1,a\n")


def test_csv_header_named_columns():
    es = parse_estimates("value,label,uncertainty\n1,a,2\n")
    assert es == [SourceEstimate(1, 2, "a")]


@pytest.mark.parametrize(
    "text",
    [
        "1\n",
        "1,2,3,4\n",
        "abc,1\n",
        "1,-1\n",
        "inf,1\n",
        "1,nan\n",
        "1_0,1\n",
        "1,2,x\n1\n",
        "1e999,1\n",
    ],
)
def test_csv_rejects(text):
    with pytest.raises(InputError):
        parse_estimates(text)


def test_decimal_comma_is_not_a_radix_point():
    with pytest.raises(InputError):
        parse_estimates('"0,5",1\n')


def test_jsonl():
    text = '{"value": 0, "uncertainty": 1, "label": "a"}\n\n{"value": "1", "uncertainty": "inf"}\n{"value": 2, "uncertainty": Infinity}\n'
    es = parse_estimates(text)
    assert es == [SourceEstimate(0, 1, "a"), SourceEstimate(1, math.inf), SourceEstimate(2, math.inf)]


@pytest.mark.parametrize(
    "text",
    ['{"value": 1}\n', "[1, 2]\n", '{"value": true, "uncertainty": 1}\n', "{bad\n", '{"value": 1, "uncertainty": -Infinity}\n'],
)
def test_jsonl_rejects(text):
    with pytest.raises(InputError):
        parse_estimates(text, "jsonl")


def test_detect_format():
    assert detect_format("# c\n\n  {\"value\": 1}") == "jsonl"
    assert detect_format("value,uncertainty\n") == "csv"
    assert detect_format("") == "csv"


def test_read_from_stream_and_missing_file(tmp_path):
    assert read_estimates(io.StringIO("5,3\n")) == [SourceEstimate(5, 3)]
    with pytest.raises(InputError):
        read_estimates(str(tmp_path / "missing.csv"))


def test_csv_round_trip():
    es = [SourceEstimate(0.1, 1 / 3, "x"), SourceEstimate(-7, math.inf)]
    assert parse_estimates(format_estimates_csv(es)) == es
