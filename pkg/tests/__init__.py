"""
가우시안 트리 학습 테스트 패키지
"""
