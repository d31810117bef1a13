"""Create classification catalog tables

Revision ID: 4e1a9c2d7b30
Revises:
Create Date: 2026-10-19 10:12:03.418552

"""
from typing import Sequence, Union

from alembic import op
import sqlalchemy as sa


# revision identifiers, used by Alembic.
revision: str = '4e1a9c2d7b30'
down_revision: Union[str, Sequence[str], None] = None
branch_labels: Union[str, Sequence[str], None] = None
depends_on: Union[str, Sequence[str], None] = None


def upgrade() -> None:
    """Upgrade schema."""
    op.create_table('classification_runs',
    sa.Column('id', sa.Integer(), nullable=False),
    sa.Column('order', sa.Integer(), nullable=False),
    sa.Column('totals_only', sa.Boolean(), nullable=True),
    sa.Column('with_alpha_sets', sa.Boolean(), nullable=True),
    sa.Column('table_count', sa.Integer(), nullable=False),
    sa.Column('class_count', sa.Integer(), nullable=False),
    sa.Column('created_at', sa.DateTime(timezone=True), nullable=True),
    sa.PrimaryKeyConstraint('id')
    )
    op.create_index(op.f('ix_classification_runs_id'), 'classification_runs', ['id'], unique=False)
    op.create_index(op.f('ix_classification_runs_order'), 'classification_runs', ['order'], unique=False)
    op.create_table('magma_classes',
    sa.Column('id', sa.Integer(), nullable=False),
    sa.Column('run_id', sa.Integer(), nullable=True),
    sa.Column('item', sa.Integer(), nullable=False),
    sa.Column('rep', sa.String(), nullable=False),
    sa.Column('members', sa.JSON(), nullable=False),
    sa.Column('wpe', sa.JSON(), nullable=True),
    sa.Column('pe', sa.JSON(), nullable=True),
    sa.Column('pha', sa.JSON(), nullable=True),
    sa.Column('ha', sa.JSON(), nullable=True),
    sa.Column('passoc', sa.Boolean(), nullable=True),
    sa.Column('assoc', sa.Boolean(), nullable=True),
    sa.ForeignKeyConstraint(['run_id'], ['classification_runs.id'], ondelete='CASCADE'),
    sa.PrimaryKeyConstraint('id')
    )
    op.create_index(op.f('ix_magma_classes_id'), 'magma_classes', ['id'], unique=False)
    op.create_index(op.f('ix_magma_classes_run_id'), 'magma_classes', ['run_id'], unique=False)
    op.create_index(op.f('ix_magma_classes_rep'), 'magma_classes', ['rep'], unique=False)
    op.create_table('verification_runs',
    sa.Column('id', sa.Integer(), nullable=False),
    sa.Column('kind', sa.Enum('paper', 'algebra', name='verificationkind'), nullable=False),
    sa.Column('status', sa.Enum('match', 'mismatch', name='verificationstatus'), nullable=False),
    sa.Column('match_count', sa.Integer(), nullable=True),
    sa.Column('mismatch_count', sa.Integer(), nullable=True),
    sa.Column('note_count', sa.Integer(), nullable=True),
    sa.Column('seed', sa.Integer(), nullable=True),
    sa.Column('entries', sa.JSON(), nullable=False),
    sa.Column('summary', sa.JSON(), nullable=True),
    sa.Column('created_at', sa.DateTime(timezone=True), nullable=True),
    sa.PrimaryKeyConstraint('id')
    )
    op.create_index(op.f('ix_verification_runs_id'), 'verification_runs', ['id'], unique=False)


def downgrade() -> None:
    """Downgrade schema."""
    op.drop_index(op.f('ix_verification_runs_id'), table_name='verification_runs')
    op.drop_table('verification_runs')
    op.drop_index(op.f('ix_magma_classes_rep'), table_name='magma_classes')
    op.drop_index(op.f('ix_magma_classes_run_id'), table_name='magma_classes')
    op.drop_index(op.f('ix_magma_classes_id'), table_name='magma_classes')
    op.drop_table('magma_classes')
    op.drop_index(op.f('ix_classification_runs_order'), table_name='classification_runs')
    op.drop_index(op.f('ix_classification_runs_id'), table_name='classification_runs')
    op.drop_table('classification_runs')
