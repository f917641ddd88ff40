"""
로깅 설정
"""

import logging

_ROOT = 'src'
_FORMAT = '%(asctime)s %(levelname)s [%(name)s] %(message)s'


def get_logger(name: str) -> logging.Logger:
    """
    패키지 계층 아래의 로거를 반환

    Parameters
    ----------
    name : str
        보통 모듈의 ``__name__``

    Returns
    -------
    logging.Logger
    """
    if not name.startswith(_ROOT):
        name = f'{_ROOT}.{name}'
    return logging.getLogger(name)


def configure_logging(verbose: int = 0) -> None:
    """
    CLI 실행 시 패키지 로거에 stderr 핸들러를 붙인다

    Parameters
    ----------
    verbose : int
        0이면 WARNING, 1이면 INFO, 2 이상이면 DEBUG
    """
    level = logging.WARNING
    if verbose == 1:
        level = logging.INFO
    elif verbose >= 2:
        level = logging.DEBUG

    root = logging.getLogger(_ROOT)
    root.setLevel(level)
    if not root.handlers:
        handler = logging.StreamHandler()
        handler.setFormatter(logging.Formatter(_FORMAT))
        root.addHandler(handler)
