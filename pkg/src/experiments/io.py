"""
CSV / JSON 입출력

모든 CSV는 `# key=value, ...` 메타데이터 줄, 열 이름 헤더, 쉼표로 구분된
10진 실수 행 순서로 쓴다. 실수는 %.17g로 써서 다시 읽으면 비트 단위로 같다.
"""

import json
import re
from pathlib import Path
from typing import Any, Dict, List, Sequence, Tuple, Union

import numpy as np

from ..linalg.sampling import SampleBatch

PathLike = Union[str, Path]
FLOAT_FORMAT = '%.17g'
# 다음 "key=" 앞의 ", "에서만 나눈다
_ITEM_BOUNDARY = re.compile(r', (?=[A-Za-z_]\w*=)')


def metadata_line(**fields: Any) -> str:
    """'# seed=7, config_hash=…' 형식 (키 순서 유지)"""
    return '# ' + ', '.join(f'{k}={v}' for k, v in fields.items())


def parse_metadata(line: str) -> Dict[str, str]:
    body = line.lstrip('#').strip()
    out: Dict[str, str] = {}
    if not body:
        return out
    for item in _ITEM_BOUNDARY.split(body):
        key, sep, value = item.partition('=')
        if not sep:
            raise ValueError(f"malformed metadata item '{item}'")
        out[key.strip()] = value.strip()
    return out


def write_table(path: PathLike, header: Sequence[str], rows, metadata: Dict[str, Any]) -> None:
    """
    메타데이터와 헤더를 가진 수치 표를 CSV로 쓴다

    Parameters
    ----------
    path : str or Path
        출력 경로
    header : Sequence[str]
        열 이름
    rows : array_like
        (행, 열) 수치
    metadata : Dict[str, Any]
        첫 줄에 기록될 값
    """
    data = np.asarray(rows, dtype=float).reshape(-1, len(header))
    with open(path, 'w', encoding='utf-8', newline='\n') as f:
        f.write(metadata_line(**metadata) + '\n')
        f.write(','.join(header) + '\n')
        if data.shape[0]:
            np.savetxt(f, data, fmt=FLOAT_FORMAT, delimiter=',')


def read_table(path: PathLike) -> Tuple[Dict[str, str], List[str], np.ndarray]:
    """
    write_table로 쓴 CSV를 읽는다

    Returns
    -------
    Tuple[Dict[str, str], List[str], np.ndarray]
        (메타데이터, 헤더, (행, 열) 배열)
    """
    metadata: Dict[str, str] = {}
    skip = 0
    with open(path, 'r', encoding='utf-8') as f:
        lines = f.read().splitlines()
    while skip < len(lines) and lines[skip].startswith('#'):
        metadata.update(parse_metadata(lines[skip]))
        skip += 1
    if skip >= len(lines):
        raise ValueError(f"{path}: missing header row")
    header = [h.strip() for h in lines[skip].split(',')]
    body = [line for line in lines[skip + 1:] if line.strip()]
    if not body:
        return metadata, header, np.zeros((0, len(header)))
    data = np.loadtxt(body, delimiter=',', ndmin=2, dtype=float)
    if data.shape[1] != len(header):
        raise ValueError(f"{path}: {data.shape[1]} columns but {len(header)} header names")
    return metadata, header, data


def write_batch_csv(path: PathLike, batch: SampleBatch, **metadata: Any) -> None:
    """표본 배치를 CSV로 저장 (seed, origin은 항상 기록)"""
    fields = {'seed': batch.seed, 'origin': batch.origin}
    fields.update(metadata)
    write_table(path, batch.names, batch.data, fields)


def read_batch_csv(path: PathLike) -> SampleBatch:
    """CSV 표본 배치를 읽는다. 메타데이터 줄은 없어도 된다."""
    metadata, header, data = read_table(path)
    if data.shape[0] == 0:
        raise ValueError(f"{path}: no sample rows")
    return SampleBatch(data,
                       seed=int(metadata.get('seed', 0)),
                       origin=metadata.get('origin', 'external'),
                       names=tuple(header))


def write_json(path: PathLike, payload: Any) -> None:
    with open(path, 'w', encoding='utf-8') as f:
        json.dump(payload, f, indent=2, sort_keys=True)
        f.write('\n')


def read_json(path: PathLike) -> Any:
    with open(path, 'r', encoding='utf-8') as f:
        return json.load(f)
