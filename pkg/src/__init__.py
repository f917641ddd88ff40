"""
가우시안 트리 구조 학습 (Chow-Liu) 구현

회귀 기반 상호정보량 추정, Chow-Liu 최대 신장 트리 학습, 하한 인스턴스
생성, graphical lasso 기준선과 재현 실험 하네스를 제공한다.
"""

__version__ = '0.1.0'
