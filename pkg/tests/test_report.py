import io
import json
import math

from spex.enumeration import EnumerationStats, ExtremalReport, FamilySpec
from spex.report import decimal_string, extremal_dict, summary_row, write_csv


def test_decimal_string():
    assert decimal_string(3 + math.sqrt(5)) == "5.23606797749979"
    assert decimal_string(4.0) == "4.00000000000000"
    assert decimal_string(3.9999999999999996) == "4.00000000000000"
    assert decimal_string(0.0) == "0"
    assert decimal_string(None) is None
    assert decimal_string(math.inf) == "inf"


def _report():
    return ExtremalReport(spec=FamilySpec.girth(6, 4), maxima=[("E?bw", 5.23606797749979)], runner_up_q=5.0,
                          gap=0.23606797749979, stats=EnumerationStats(40, 12, 9, 1.25),
                          verdict="confirmed-unique")


def test_extremal_dict_omits_wall_time_by_default():
    d = extremal_dict(_report())
    assert list(d) == ["spec", "verdict", "maxima", "runner_up_q", "gap", "expected", "expected_among_maxima",
                       "gap_tol", "stats", "notes"]
    assert "wall_time" not in d["stats"]
    assert extremal_dict(_report(), timings=True)["stats"]["wall_time"] == 1.25
    assert json.loads(json.dumps(d)) == d


def test_csv_summary():
    buffer = io.StringIO()
    write_csv([summary_row(_report())], buffer)
    header, row = buffer.getvalue().splitlines()
    assert header == "spec,verdict,q_max,gap,unique_count,wall_time"
    assert row.startswith('"m=6,girth=4",confirmed-unique,5.23606797749979,')
